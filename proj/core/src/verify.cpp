#include "sandpile/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace sandpile::verify {

namespace {

void require_stable(const Graph& g, const Configuration& c, const char* op) {
    if (!is_stable(g, c)) {
        throw std::domain_error(std::string(op) + " requires a stable configuration");
    }
}

}  // namespace

bool is_recurrent_by_permutation_search(const Graph& g, const Configuration& c) {
    require_stable(g, c, "is_recurrent_by_permutation_search");
    const int n = g.nonsink_count();
    if (n > 8) throw std::domain_error("permutation search capped at 8 non-sink vertices");

    std::vector<int> after_sink = c.heights;
    for (int w : g.neighbors(g.sink())) {
        if (w != g.sink()) after_sink[w - 1] += 1;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    do {
        std::vector<int> h = after_sink;
        bool ok = true;
        for (int v : order) {
            if (h[v - 1] < g.degree(v)) {
                ok = false;
                break;
            }
            h[v - 1] -= g.degree(v);
            for (int w : g.neighbors(v)) {
                if (w != g.sink()) h[w - 1] += 1;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

bool is_parking_by_subset_scan(const Graph& g, const Configuration& c) {
    require_stable(g, c, "is_parking_by_subset_scan");
    const int n = g.nonsink_count();
    if (n > 12) throw std::domain_error("subset scan capped at 12 non-sink vertices");

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        // c - delta_A is non-negative iff every member covers its edges
        // leaving A; entries outside A only grow
        bool non_negative = true;
        for (int v = 1; v <= n && non_negative; ++v) {
            if (!(mask & (1u << (v - 1)))) continue;
            int out_edges = 0;
            for (int w : g.neighbors(v)) {
                if (w == g.sink() || !(mask & (1u << (w - 1)))) ++out_edges;
            }
            if (c.heights[v - 1] < out_edges) non_negative = false;
        }
        if (non_negative) return false;  // witness subset found
    }
    return true;
}

std::vector<Configuration> all_stable_configurations(const Graph& g) {
    long long total = 1;
    for (int v = 1; v <= g.nonsink_count(); ++v) {
        total *= g.degree(v);
        if (total > 2'000'000) {
            throw std::domain_error("too many stable configurations to enumerate");
        }
    }
    std::vector<Configuration> out;
    out.reserve(static_cast<size_t>(total));
    Configuration c(std::vector<int>(g.nonsink_count(), 0));
    while (true) {
        out.push_back(c);
        int v = 1;
        while (v <= g.nonsink_count()) {
            if (++c.heights[v - 1] < g.degree(v)) break;
            c.heights[v - 1] = 0;
            ++v;
        }
        if (v > g.nonsink_count()) break;
    }
    return out;
}

namespace {

// Column-echelon basis of the lattice spanned by the reduced toppling
// vectors. Column r ends with its first non-zero entry on the diagonal,
// positive, and zeros to its right on that row.
std::vector<std::vector<long long>> lattice_basis(const Graph& g) {
    const int n = g.nonsink_count();
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int j = 1; j <= n; ++j) {
        w[j - 1][j - 1] = g.degree(j);
        for (int i = 1; i <= n; ++i) {
            if (i != j && g.has_edge(i, j)) w[i - 1][j - 1] = -1;
        }
    }
    // integer column elimination
    for (int r = 0; r < n; ++r) {
        for (;;) {
            int pivot = -1;
            for (int j = r; j < n; ++j) {
                if (w[r][j] != 0 && (pivot < 0 || std::llabs(w[r][j]) < std::llabs(w[r][pivot]))) {
                    pivot = j;
                }
            }
            if (pivot < 0) throw std::logic_error("singular reduced Laplacian");
            if (pivot != r) {
                for (int i = 0; i < n; ++i) std::swap(w[i][r], w[i][pivot]);
            }
            bool reduced = true;
            for (int j = r + 1; j < n; ++j) {
                if (w[r][j] == 0) continue;
                long long q = w[r][j] / w[r][r];
                for (int i = 0; i < n; ++i) w[i][j] -= q * w[i][r];
                if (w[r][j] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (w[r][r] < 0) {
            for (int i = 0; i < n; ++i) w[i][r] = -w[i][r];
        }
    }
    return w;
}

}  // namespace

std::vector<long long> class_residue(const Graph& g, const Configuration& c) {
    if (c.size() != g.nonsink_count()) {
        throw std::invalid_argument("class_residue: configuration size mismatch");
    }
    const int n = g.nonsink_count();
    std::vector<std::vector<long long>> basis = lattice_basis(g);
    std::vector<long long> v(c.heights.begin(), c.heights.end());
    for (int r = 0; r < n; ++r) {
        long long q = v[r] / basis[r][r];
        if (v[r] % basis[r][r] < 0) --q;  // floor
        for (int i = 0; i < n; ++i) v[i] -= q * basis[i][r];
    }
    return v;
}

long long toppling_class_count(const Graph& g) {
    std::vector<std::vector<long long>> basis = lattice_basis(g);
    long long det = 1;
    for (size_t r = 0; r < basis.size(); ++r) det *= basis[r][r];
    return det;
}

std::vector<Graph> small_graph_family(int max_nonsink) {
    std::vector<Graph> family;
    auto add = [&](int vertices, const std::vector<std::pair<int, int>>& edges) {
        if (vertices - 1 <= max_nonsink) family.emplace_back(vertices, edges);
    };

    // paths
    for (int v = 2; v <= max_nonsink + 1; ++v) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < v; ++i) edges.emplace_back(i, i + 1);
        add(v, edges);
    }
    // cycles
    for (int v = 3; v <= max_nonsink + 1; ++v) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < v; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(v, 1);
        add(v, edges);
    }
    // stars (hub at vertex 1, sink one of the leaves)
    for (int leaves = 2; leaves <= max_nonsink; ++leaves) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
        add(leaves + 1, edges);
    }
    // complete graphs
    for (int v = 3; v <= max_nonsink + 1; ++v) family.push_back(make_complete(v));
    // complete bipartite graphs
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        if (m + n - 1 <= max_nonsink) family.push_back(make_complete_bipartite(m, n));
    }
    // wheels: cycle 1..v-1 plus hub v
    for (int v = 5; v <= max_nonsink + 1; ++v) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < v - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(v - 1, 1);
        for (int i = 1; i < v; ++i) edges.emplace_back(i, v);
        add(v, edges);
    }
    // seeded random connected graphs
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int v : {4, 5, 6, 6, 6}) {
        if (v - 1 > max_nonsink) continue;
        for (;;) {
            std::vector<std::pair<int, int>> edges;
            for (int a = 1; a <= v; ++a) {
                for (int b = a + 1; b <= v; ++b) {
                    if (coin(rng)) edges.emplace_back(a, b);
                }
            }
            try {
                family.emplace_back(v, edges);
                break;
            } catch (const std::invalid_argument&) {
                continue;  // disconnected or isolated vertex; redraw
            }
        }
    }
    return family;
}

}  // namespace sandpile::verify
