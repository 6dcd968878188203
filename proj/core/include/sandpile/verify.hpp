#pragma once

#include <vector>

#include "sandpile/graph.hpp"

namespace sandpile::verify {

// Reference implementations and cross-check helpers. These are deliberately
// naive: they exist to validate the production algorithms in tests and in
// the self-test suite, never to be fast.

/// Recurrence by literal definition: try every order of toppling each
/// non-sink vertex exactly once after the sink fires. Capped at 8 non-sink
/// vertices.
bool is_recurrent_by_permutation_search(const Graph& g, const Configuration& c);

/// Parking by literal definition: scan all 2^n - 1 non-empty subsets.
/// Capped at 12 non-sink vertices.
bool is_parking_by_subset_scan(const Graph& g, const Configuration& c);

/// Every stable configuration of g, in odometer order.
std::vector<Configuration> all_stable_configurations(const Graph& g);

/// Canonical representative of c modulo the lattice spanned by the toppling
/// vectors (reduced to non-sink coordinates). Two configurations are
/// toppling equivalent iff their residues agree.
std::vector<long long> class_residue(const Graph& g, const Configuration& c);

/// Determinant of the reduced Laplacian = number of toppling classes.
long long toppling_class_count(const Graph& g);

/// Fixed deterministic family of small connected graphs (every member has
/// at most `max_nonsink` non-sink vertices), mixing paths, cycles, stars,
/// complete and complete bipartite graphs and seeded random graphs.
std::vector<Graph> small_graph_family(int max_nonsink = 5);

}  // namespace sandpile::verify
