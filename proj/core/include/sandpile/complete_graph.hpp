#pragma once

#include <vector>

#include "sandpile/bipartite.hpp"

namespace sandpile {

/// Configuration on the complete graph K_n with sink v_n; heights of
/// v_1..v_{n-1}, each vertex of degree n-1.
struct CompleteConfig {
    int n = 0;
    std::vector<int> heights;  // length n-1

    bool operator==(const CompleteConfig&) const = default;
};

CompleteConfig make_complete_config(int n, std::vector<int> heights);

bool is_stable(const CompleteConfig& v);

/// The staircase, 0-free embedding of a stable v into K_{n,n}: non-sink part
/// (0, 1, .., n-1), sink part sorted(v + 1).
SortedBipartiteConfig embed_staircase(const CompleteConfig& v);

struct KnOperatorResult {
    CompleteConfig result;                        // sorted heights
    int applications = 0;                         // iterations of the K_{n,n} operator
    std::vector<SortedBipartiteConfig> iterates;  // embedding and its images, k of them after the first
};

/// phi on K_n through the staircase embedding: iterate phi on K_{n,n} until
/// the image is 0-free and differs from the embedding, then strip the sink
/// part and subtract one. Falls back to v itself when no iterate qualifies.
/// Results are reported sorted.
KnOperatorResult phi_kn_trace(const CompleteConfig& v);
KnOperatorResult psi_kn_trace(const CompleteConfig& v);

CompleteConfig phi_kn(const CompleteConfig& v);
CompleteConfig psi_kn(const CompleteConfig& v);

}  // namespace sandpile
