#pragma once

#include <vector>

#include "sandpile/graph.hpp"

namespace sandpile {

/// Sorted configuration on the complete bipartite graph K_{m,n}.
///
/// Vertices v_1..v_n form the non-sink side (each of degree m), vertices
/// v_{n+1}..v_{n+m} the sink side (each of degree n) with v_{n+m} the sink.
/// Both stored parts are weakly increasing; the sink is not stored.
///
/// m >= 2 is required: with m = 1 the sink side holds only the sink and the
/// path calculus degenerates, so K_{1,n} users fall back to the general
/// graph module. n = 1 is supported.
struct SortedBipartiteConfig {
    int m = 0;
    int n = 0;
    std::vector<int> nonsink;   // length n
    std::vector<int> sinkpart;  // length m-1

    bool operator==(const SortedBipartiteConfig&) const = default;
};

/// Validating constructor; throws std::invalid_argument on shape errors.
SortedBipartiteConfig make_sorted_bipartite(int m, int n, std::vector<int> nonsink,
                                            std::vector<int> sinkpart);

/// Stability 0 <= c <= delta with delta = (m-1,..; n-1,..). Only the extreme
/// entries are inspected since the parts are sorted.
bool is_stable(const SortedBipartiteConfig& c);

/// max - min <= m on the non-sink part and <= n on the sink part.
bool is_compact_range(const SortedBipartiteConfig& c);

/// Topple the largest non-sink vertex and re-sort, in closed form:
/// (c_n - m, c_1, .., c_{n-1}; c_{n+1}+1, .., c_{n+m-1}+1).
/// Requires the compact range assumption, which the result preserves.
SortedBipartiteConfig t_nonsink(const SortedBipartiteConfig& c);

/// Mirror image on the sink part:
/// (c_1+1, .., c_n+1; c_{n+m-1} - n, c_{n+1}, .., c_{n+m-2}).
SortedBipartiteConfig t_sink(const SortedBipartiteConfig& c);

/// Inverses of the two translations, defined on compact-range inputs.
SortedBipartiteConfig t_nonsink_inv(const SortedBipartiteConfig& c);
SortedBipartiteConfig t_sink_inv(const SortedBipartiteConfig& c);

/// Reverse both parts and complement against delta. Maps sorted stable
/// configurations to sorted stable configurations and conjugates the two
/// operators: psi = rho_beta . phi . rho_beta.
SortedBipartiteConfig rho_beta(const SortedBipartiteConfig& c);

/// phi on K_{m,n} by the translation loop; returns the input when it is
/// parking. Requires a stable input.
SortedBipartiteConfig phi_kmn(const SortedBipartiteConfig& c);

/// psi on K_{m,n}, computed as rho_beta . phi_kmn . rho_beta.
SortedBipartiteConfig psi_kmn(const SortedBipartiteConfig& c);

/// Position of c in its class walk: 0 for parking up to m-1 for recurrent.
/// Counts the east steps of the anchored period with positive relative
/// position. Requires a stable input.
int grade_kmn(const SortedBipartiteConfig& c);

/// The m sorted stable configurations of the class of c, from the recurrent
/// one to the parking one; c sits at index m-1-grade(c).
std::vector<SortedBipartiteConfig> walk_class(const SortedBipartiteConfig& c);

/// Conversions to/from configurations on the general graph K_{m,n}
/// (heights ordered v_1..v_{n+m-1}).
Configuration to_general(const SortedBipartiteConfig& c);
SortedBipartiteConfig sorted_from_general(int m, int n, const Configuration& c);

}  // namespace sandpile
