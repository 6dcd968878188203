#include "sandpile/bipartite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sandpile/paths.hpp"

namespace sandpile {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void require_shape(const SortedBipartiteConfig& c) {
    require(c.m >= 2, "bipartite configuration needs m >= 2 (use the general module for K_{1,n})");
    require(c.n >= 1, "bipartite configuration needs n >= 1");
    require(static_cast<int>(c.nonsink.size()) == c.n, "non-sink part must have n entries");
    require(static_cast<int>(c.sinkpart.size()) == c.m - 1, "sink part must have m-1 entries");
    require(std::is_sorted(c.nonsink.begin(), c.nonsink.end()), "non-sink part must be sorted");
    require(std::is_sorted(c.sinkpart.begin(), c.sinkpart.end()), "sink part must be sorted");
}

void require_compact(const SortedBipartiteConfig& c, const char* op) {
    if (!is_compact_range(c)) {
        throw std::domain_error(std::string(op) + " requires the compact range assumption");
    }
}

void require_stable(const SortedBipartiteConfig& c, const char* op) {
    if (!is_stable(c)) {
        throw std::domain_error(std::string(op) + " requires a stable configuration");
    }
}

}  // namespace

SortedBipartiteConfig make_sorted_bipartite(int m, int n, std::vector<int> nonsink,
                                            std::vector<int> sinkpart) {
    SortedBipartiteConfig c{m, n, std::move(nonsink), std::move(sinkpart)};
    require_shape(c);
    return c;
}

bool is_stable(const SortedBipartiteConfig& c) {
    require_shape(c);
    // sorted parts: only the extremes matter
    if (c.nonsink.front() < 0 || c.nonsink.back() > c.m - 1) return false;
    if (c.sinkpart.front() < 0 || c.sinkpart.back() > c.n - 1) return false;
    return true;
}

bool is_compact_range(const SortedBipartiteConfig& c) {
    require_shape(c);
    if (c.nonsink.back() - c.nonsink.front() > c.m) return false;
    if (c.sinkpart.back() - c.sinkpart.front() > c.n) return false;
    return true;
}

SortedBipartiteConfig t_nonsink(const SortedBipartiteConfig& c) {
    require_compact(c, "t_nonsink");
    SortedBipartiteConfig out = c;
    out.nonsink[0] = c.nonsink[c.n - 1] - c.m;
    std::copy(c.nonsink.begin(), c.nonsink.end() - 1, out.nonsink.begin() + 1);
    for (int& h : out.sinkpart) ++h;
    return out;
}

SortedBipartiteConfig t_sink(const SortedBipartiteConfig& c) {
    require_compact(c, "t_sink");
    SortedBipartiteConfig out = c;
    for (int& h : out.nonsink) ++h;
    out.sinkpart[0] = c.sinkpart[c.m - 2] - c.n;
    std::copy(c.sinkpart.begin(), c.sinkpart.end() - 1, out.sinkpart.begin() + 1);
    return out;
}

SortedBipartiteConfig t_nonsink_inv(const SortedBipartiteConfig& c) {
    require_compact(c, "t_nonsink_inv");
    SortedBipartiteConfig out = c;
    std::copy(c.nonsink.begin() + 1, c.nonsink.end(), out.nonsink.begin());
    out.nonsink[c.n - 1] = c.nonsink[0] + c.m;
    for (int& h : out.sinkpart) --h;
    return out;
}

SortedBipartiteConfig t_sink_inv(const SortedBipartiteConfig& c) {
    require_compact(c, "t_sink_inv");
    SortedBipartiteConfig out = c;
    for (int& h : out.nonsink) --h;
    std::copy(c.sinkpart.begin() + 1, c.sinkpart.end(), out.sinkpart.begin());
    out.sinkpart[c.m - 2] = c.sinkpart[0] + c.n;
    return out;
}

SortedBipartiteConfig rho_beta(const SortedBipartiteConfig& c) {
    require_shape(c);
    SortedBipartiteConfig out = c;
    for (int i = 0; i < c.n; ++i) out.nonsink[i] = (c.m - 1) - c.nonsink[c.n - 1 - i];
    for (int j = 0; j < c.m - 1; ++j) out.sinkpart[j] = (c.n - 1) - c.sinkpart[c.m - 2 - j];
    return out;
}

SortedBipartiteConfig phi_kmn(const SortedBipartiteConfig& c) {
    require_stable(c, "phi_kmn");
    const int m = c.m, n = c.n;
    SortedBipartiteConfig cur = t_nonsink(t_sink(c));
    int nloops = 0;
    while (!is_stable(cur)) {
        if (nloops >= m + n) return c;  // only reachable from a parking input
        // non-sink side overflowing, or sink side gone negative
        if (cur.nonsink.back() > m - 1 || cur.sinkpart.front() < 0) cur = t_nonsink(cur);
        // sink side overflowing, or non-sink side gone negative
        if (cur.sinkpart.back() > n - 1 || cur.nonsink.front() < 0) cur = t_sink(cur);
        ++nloops;
    }
    return cur;
}

SortedBipartiteConfig psi_kmn(const SortedBipartiteConfig& c) {
    require_stable(c, "psi_kmn");
    return rho_beta(phi_kmn(rho_beta(c)));
}

int grade_kmn(const SortedBipartiteConfig& c) {
    require_stable(c, "grade_kmn");
    FramedPair p = config_to_framed_pair(c);
    int grade = 0;
    for (int k = 0; k < c.m; ++k) {
        if (pos(p, k) >= 1) ++grade;
    }
    return grade;
}

std::vector<SortedBipartiteConfig> walk_class(const SortedBipartiteConfig& c) {
    require_stable(c, "walk_class");
    SortedBipartiteConfig rec = c;
    for (int guard = 0; ; ++guard) {
        SortedBipartiteConfig next = psi_kmn(rec);
        if (next == rec) break;
        rec = std::move(next);
        if (guard > c.m) throw std::logic_error("walk_class: recurrent fixed point not reached");
    }
    std::vector<SortedBipartiteConfig> walk{rec};
    for (int k = 1; k < c.m; ++k) walk.push_back(phi_kmn(walk.back()));
    return walk;
}

Configuration to_general(const SortedBipartiteConfig& c) {
    require_shape(c);
    std::vector<int> heights = c.nonsink;
    heights.insert(heights.end(), c.sinkpart.begin(), c.sinkpart.end());
    return Configuration(std::move(heights));
}

SortedBipartiteConfig sorted_from_general(int m, int n, const Configuration& c) {
    if (c.size() != n + m - 1) {
        throw std::invalid_argument("expected " + std::to_string(n + m - 1) +
                                    " heights for K_{m,n}");
    }
    std::vector<int> nonsink(c.heights.begin(), c.heights.begin() + n);
    std::vector<int> sinkpart(c.heights.begin() + n, c.heights.end());
    std::sort(nonsink.begin(), nonsink.end());
    std::sort(sinkpart.begin(), sinkpart.end());
    return make_sorted_bipartite(m, n, std::move(nonsink), std::move(sinkpart));
}

}  // namespace sandpile
