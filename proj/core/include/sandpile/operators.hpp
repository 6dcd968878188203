#pragma once

#include <optional>
#include <vector>

#include "sandpile/graph.hpp"

namespace sandpile {

/// Non-empty subsets of {1,..,n} are scanned by cardinality first, then
/// lexicographically on the sorted index list. The scan is exponential in n,
/// so the general-graph operators refuse to run past this many non-sink
/// vertices unless the caller raises the limit explicitly. Complete and
/// complete bipartite graphs have polynomial specializations elsewhere.
inline constexpr int kSubsetScanLimit = 20;

/// Cursor over subsets of {1,..,universe} in scan order. The empty set is
/// the start state; the first advance yields {1}.
struct SubsetCursor {
    int universe = 0;
    std::vector<int> current;  // strictly increasing, 1-based

    bool operator==(const SubsetCursor&) const = default;
};

/// Successor of `cur` in the subset order, or nullopt once {1,..,n} is done.
std::optional<SubsetCursor> next_subset(const SubsetCursor& cur);

/// In-place variant used by the scan loops: advances `s` to the next subset,
/// or returns false when exhausted.
bool advance_subset(std::vector<int>& s, int n);

/// c + delta_A / c - delta_A restricted to non-sink vertices.
Configuration add_cluster(const Graph& g, const Configuration& c, const std::vector<int>& a);
Configuration subtract_cluster(const Graph& g, const Configuration& c, const std::vector<int>& a);

/// Adds the scan-minimal cluster toppling that keeps the configuration
/// stable; fixed points are exactly the recurrent configurations.
Configuration psi(const Graph& g, const Configuration& c, int scan_limit = kSubsetScanLimit);

/// Subtracts the scan-minimal cluster toppling that keeps the configuration
/// stable; fixed points are exactly the parking configurations.
Configuration phi(const Graph& g, const Configuration& c, int scan_limit = kSubsetScanLimit);

/// The minimal subset used by psi/phi, if the operator moves the input.
std::optional<std::vector<int>> psi_cluster(const Graph& g, const Configuration& c,
                                            int scan_limit = kSubsetScanLimit);
std::optional<std::vector<int>> phi_cluster(const Graph& g, const Configuration& c,
                                            int scan_limit = kSubsetScanLimit);

/// The involution c_i -> (degree(i) - 1) - c_i. Conjugates phi and psi.
Configuration beta(const Graph& g, const Configuration& c);

enum class NormalizeTarget { Recurrent, Parking };

struct NormalizeResult {
    Configuration fixed_point;
    int steps = 0;
    std::vector<Configuration> trajectory;  // filled only when requested; includes endpoints
};

/// Iterates psi (target Recurrent) or phi (target Parking) to its fixed
/// point. Terminates because each step strictly moves the distance profile.
NormalizeResult normalize(const Graph& g, const Configuration& c, NormalizeTarget target,
                          bool record_trajectory = false, int scan_limit = kSubsetScanLimit);

}  // namespace sandpile
