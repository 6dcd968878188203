#include "sandpile/complete_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sandpile {

CompleteConfig make_complete_config(int n, std::vector<int> heights) {
    if (n < 2) throw std::invalid_argument("complete graph configurations need n >= 2");
    if (static_cast<int>(heights.size()) != n - 1) {
        throw std::invalid_argument("expected " + std::to_string(n - 1) + " heights for K_" +
                                    std::to_string(n));
    }
    return CompleteConfig{n, std::move(heights)};
}

bool is_stable(const CompleteConfig& v) {
    for (int h : v.heights) {
        if (h < 0 || h > v.n - 2) return false;
    }
    return true;
}

SortedBipartiteConfig embed_staircase(const CompleteConfig& v) {
    if (!is_stable(v)) throw std::domain_error("embed_staircase requires a stable configuration");
    std::vector<int> nonsink(v.n);
    std::iota(nonsink.begin(), nonsink.end(), 0);
    std::vector<int> sinkpart = v.heights;
    for (int& h : sinkpart) ++h;
    std::sort(sinkpart.begin(), sinkpart.end());
    return make_sorted_bipartite(v.n, v.n, std::move(nonsink), std::move(sinkpart));
}

namespace {

bool is_zero_free(const SortedBipartiteConfig& c) { return c.sinkpart.front() >= 1; }

// Stable iterates of a staircase configuration stay staircase: modulo n the
// non-sink heights hit every residue once, which pins the sorted part.
void check_staircase(const SortedBipartiteConfig& c) {
    for (int i = 0; i < c.n; ++i) {
        if (c.nonsink[i] != i) {
            throw std::logic_error("staircase shape lost during the K_n reduction");
        }
    }
}

KnOperatorResult reduce_through_embedding(const CompleteConfig& v,
                                          SortedBipartiteConfig (*op)(const SortedBipartiteConfig&)) {
    KnOperatorResult out;
    SortedBipartiteConfig u = embed_staircase(v);
    out.iterates.push_back(u);

    SortedBipartiteConfig cur = u;
    for (int k = 1; k <= v.n; ++k) {
        SortedBipartiteConfig next = op(cur);
        if (next == cur) break;  // fixed point reached, no qualifying iterate
        check_staircase(next);
        out.iterates.push_back(next);
        if (is_zero_free(next) && !(next == u)) {
            std::vector<int> heights = next.sinkpart;
            for (int& h : heights) --h;
            out.result = make_complete_config(v.n, std::move(heights));
            out.applications = k;
            return out;
        }
        cur = std::move(next);
        if (k == v.n) throw std::logic_error("K_n reduction exceeded one class walk");
    }

    std::vector<int> heights = v.heights;
    std::sort(heights.begin(), heights.end());
    out.result = make_complete_config(v.n, std::move(heights));
    out.applications = 0;
    return out;
}

}  // namespace

KnOperatorResult phi_kn_trace(const CompleteConfig& v) {
    return reduce_through_embedding(v, &phi_kmn);
}

KnOperatorResult psi_kn_trace(const CompleteConfig& v) {
    return reduce_through_embedding(v, &psi_kmn);
}

CompleteConfig phi_kn(const CompleteConfig& v) { return phi_kn_trace(v).result; }

CompleteConfig psi_kn(const CompleteConfig& v) { return psi_kn_trace(v).result; }

}  // namespace sandpile
