#include "sandpile/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace sandpile {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : total_(vertex_count) {
    if (vertex_count < 2) {
        throw std::invalid_argument("graph needs at least two vertices (one plus the sink)");
    }
    adj_.assign(static_cast<size_t>(total_) * total_, 0);
    degree_.assign(total_, 0);
    nbr_.assign(total_, {});
    for (auto [a, b] : edges) {
        if (a < 1 || a > total_ || b < 1 || b > total_) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) +
                                        "," + std::to_string(b) + ")");
        }
        if (a == b) throw std::invalid_argument("self-loops are not allowed");
        unsigned char& cell = adj_[(a - 1) * static_cast<size_t>(total_) + (b - 1)];
        if (cell) throw std::invalid_argument("duplicate edge (" + std::to_string(a) + "," +
                                              std::to_string(b) + ")");
        cell = 1;
        adj_[(b - 1) * static_cast<size_t>(total_) + (a - 1)] = 1;
        ++degree_[a - 1];
        ++degree_[b - 1];
        nbr_[a - 1].push_back(b);
        nbr_[b - 1].push_back(a);
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (auto& list : nbr_) std::sort(list.begin(), list.end());
    std::sort(edges_.begin(), edges_.end());

    for (int v = 1; v <= total_; ++v) {
        if (degree_[v - 1] == 0) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated");
        }
    }
    // connectivity
    std::vector<char> seen(total_, 0);
    std::deque<int> queue{1};
    seen[0] = 1;
    int reached = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++reached;
        for (int w : nbr_[v - 1]) {
            if (!seen[w - 1]) {
                seen[w - 1] = 1;
                queue.push_back(w);
            }
        }
    }
    if (reached != total_) throw std::invalid_argument("graph is not connected");
}

int Graph::check(int v) const {
    if (v < 1 || v > total_) {
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range 1.." +
                                std::to_string(total_));
    }
    return v;
}

Graph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite graph needs m, n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = n + 1; b <= n + m; ++b) edges.emplace_back(a, b);
    return Graph(n + m, edges);
}

namespace {

void check_size(const Graph& g, const Configuration& c) {
    if (c.size() != g.nonsink_count()) {
        throw std::invalid_argument("configuration has " + std::to_string(c.size()) +
                                    " heights, expected " + std::to_string(g.nonsink_count()));
    }
}

void require_stable(const Graph& g, const Configuration& c, const char* op) {
    if (!is_stable(g, c)) {
        throw std::domain_error(std::string(op) + " requires a stable configuration");
    }
}

}  // namespace

std::vector<int> toppling_vector(const Graph& g, int v) {
    std::vector<int> delta(g.nonsink_count(), 0);
    if (v != g.sink()) delta[v - 1] = g.degree(v);
    for (int w : g.neighbors(v)) {
        if (w != g.sink()) delta[w - 1] -= 1;
    }
    return delta;
}

Configuration topple(const Graph& g, const Configuration& c, int v) {
    check_size(g, c);
    std::vector<int> delta = toppling_vector(g, v);
    Configuration out = c;
    for (int i = 0; i < out.size(); ++i) out.heights[i] -= delta[i];
    return out;
}

Configuration untopple(const Graph& g, const Configuration& c, int v) {
    check_size(g, c);
    std::vector<int> delta = toppling_vector(g, v);
    Configuration out = c;
    for (int i = 0; i < out.size(); ++i) out.heights[i] += delta[i];
    return out;
}

bool is_stable(const Graph& g, const Configuration& c) {
    check_size(g, c);
    for (int v = 1; v <= g.nonsink_count(); ++v) {
        int h = c.heights[v - 1];
        if (h < 0 || h >= g.degree(v)) return false;
    }
    return true;
}

bool is_recurrent(const Graph& g, const Configuration& c) {
    require_stable(g, c, "is_recurrent");
    std::vector<int> work = c.heights;
    for (int w : g.neighbors(g.sink())) work[w - 1] += 1;

    std::vector<char> fired(g.nonsink_count(), 0);
    int remaining = g.nonsink_count();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 1; v <= g.nonsink_count(); ++v) {
            if (fired[v - 1] || work[v - 1] < g.degree(v)) continue;
            fired[v - 1] = 1;
            work[v - 1] -= g.degree(v);
            for (int w : g.neighbors(v)) {
                if (w != g.sink()) work[w - 1] += 1;
            }
            --remaining;
            progress = true;
        }
    }
    return remaining == 0;
}

bool is_parking(const Graph& g, const Configuration& c) {
    require_stable(g, c, "is_parking");
    // alive = surviving set; a vertex dies once its height cannot cover the
    // edges leaving the survivors (towards dead vertices or the sink)
    std::vector<char> alive(g.nonsink_count(), 1);
    int survivors = g.nonsink_count();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 1; v <= g.nonsink_count(); ++v) {
            if (!alive[v - 1]) continue;
            int out_edges = 0;
            for (int w : g.neighbors(v)) {
                if (w == g.sink() || !alive[w - 1]) ++out_edges;
            }
            if (c.heights[v - 1] < out_edges) {
                alive[v - 1] = 0;
                --survivors;
                progress = true;
            }
        }
    }
    return survivors == 0;
}

std::vector<int> sink_distances(const Graph& g) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{g.sink()};
    dist[g.sink() - 1] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w - 1] < 0) {
                dist[w - 1] = dist[v - 1] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.resize(g.nonsink_count());  // drop the sink entry
    return dist;
}

DistanceProfile distance_profile(const Graph& g, const Configuration& c) {
    check_size(g, c);
    std::vector<int> dist = sink_distances(g);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    DistanceProfile profile(ecc, 0);
    for (int v = 1; v <= g.nonsink_count(); ++v) {
        profile[dist[v - 1] - 1] += c.heights[v - 1];
    }
    return profile;
}

std::strong_ordering compare_lt2(const Graph& g, const Configuration& a, const Configuration& b) {
    DistanceProfile pa = distance_profile(g, a);
    DistanceProfile pb = distance_profile(g, b);
    return pa <=> pb;
}

}  // namespace sandpile
