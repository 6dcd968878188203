#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "sandpile/bipartite.hpp"
#include "sandpile/graph.hpp"

namespace sandpile::test {

inline Graph example_graph() {
    return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}});
}

inline Configuration conf(std::vector<int> h) { return Configuration(std::move(h)); }

inline SortedBipartiteConfig bip(int m, int n, std::vector<int> nonsink,
                                 std::vector<int> sinkpart) {
    return make_sorted_bipartite(m, n, std::move(nonsink), std::move(sinkpart));
}

// All sorted stable configurations on K_{m,n}.
inline std::vector<SortedBipartiteConfig> all_sorted_stable(int m, int n) {
    auto weakly_increasing = [](int len, int max) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur(len, 0);
        if (len == 0) {
            out.push_back(cur);
            return out;
        }
        for (;;) {
            out.push_back(cur);
            int i = len - 1;
            while (i >= 0 && cur[i] == max) --i;
            if (i < 0) break;
            int v = cur[i] + 1;
            for (int j = i; j < len; ++j) cur[j] = v;
        }
        return out;
    };
    std::vector<SortedBipartiteConfig> all;
    for (const auto& a : weakly_increasing(n, m - 1)) {
        for (const auto& b : weakly_increasing(m - 1, n - 1)) {
            all.push_back(bip(m, n, a, b));
        }
    }
    return all;
}

}  // namespace sandpile::test
