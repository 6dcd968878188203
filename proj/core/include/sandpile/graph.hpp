#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace sandpile {

/// Heights at the non-sink vertices. The sink height is immaterial and is
/// never stored; human-readable output prints it as "*". Entries may go
/// negative in intermediate states.
struct Configuration {
    std::vector<int> heights;

    Configuration() = default;
    explicit Configuration(std::vector<int> h) : heights(std::move(h)) {}

    int size() const { return static_cast<int>(heights.size()); }
    bool operator==(const Configuration&) const = default;
};

/// Undirected connected loop-free graph with a distinguished sink.
///
/// Vertices are 1-based in the whole public API, matching the JSON format,
/// and the sink is always the highest index. Edges are simple; duplicate
/// edges and self-loops are rejected at construction.
class Graph {
public:
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return total_; }      // including the sink
    int nonsink_count() const { return total_ - 1; }
    int sink() const { return total_; }

    int degree(int v) const { return degree_[check(v) - 1]; }
    bool has_edge(int a, int b) const { return adj_[(check(a) - 1) * total_ + (check(b) - 1)] != 0; }
    const std::vector<int>& neighbors(int v) const { return nbr_[check(v) - 1]; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& o) const { return total_ == o.total_ && adj_ == o.adj_; }

private:
    int check(int v) const;

    int total_ = 0;
    std::vector<unsigned char> adj_;       // flat total x total incidence
    std::vector<int> degree_;
    std::vector<std::vector<int>> nbr_;    // sorted 1-based neighbour lists
    std::vector<std::pair<int, int>> edges_;
};

Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);

/// Toppling vector of vertex v restricted to the non-sink entries, i.e. the
/// value subtracted from a configuration when v fires. Toppling the sink is
/// allowed and adds one grain to each sink neighbour.
std::vector<int> toppling_vector(const Graph& g, int v);

Configuration topple(const Graph& g, const Configuration& c, int v);    // c - delta_v
Configuration untopple(const Graph& g, const Configuration& c, int v);  // c + delta_v

/// True iff 0 <= c_i <= degree(i) - 1 for every non-sink vertex.
bool is_stable(const Graph& g, const Configuration& c);

/// Burning test: after toppling the sink, every non-sink vertex can be
/// toppled exactly once with all intermediate configurations non-negative.
/// The greedy order is sound by confluence of the abelian model.
/// Requires a stable input.
bool is_recurrent(const Graph& g, const Configuration& c);

/// True iff c - delta_A has a negative entry for every non-empty subset A of
/// non-sink vertices. Implemented by the pruning loop: repeatedly delete a
/// surviving vertex whose height is smaller than its edge count towards
/// already-deleted vertices and the sink; parking iff everything is deleted.
/// Requires a stable input.
bool is_parking(const Graph& g, const Configuration& c);

/// BFS distances from the sink for vertices 1..n (non-sink only).
std::vector<int> sink_distances(const Graph& g);

/// Total grains at distance k from the sink, k = 1..eccentricity(sink).
/// The distance-0 entry (the sink itself) is immaterial and omitted.
using DistanceProfile = std::vector<long long>;
DistanceProfile distance_profile(const Graph& g, const Configuration& c);

/// Lexicographic comparison of distance profiles.
std::strong_ordering compare_lt2(const Graph& g, const Configuration& a, const Configuration& b);

}  // namespace sandpile
