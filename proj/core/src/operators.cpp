#include "sandpile/operators.hpp"

#include <stdexcept>
#include <string>

namespace sandpile {

namespace {

void require_stable(const Graph& g, const Configuration& c, const char* op) {
    if (!is_stable(g, c)) {
        throw std::domain_error(std::string(op) + " requires a stable configuration");
    }
}

void require_scan_size(const Graph& g, int scan_limit, const char* op) {
    if (g.nonsink_count() > scan_limit) {
        throw std::domain_error(std::string(op) + ": subset scan refused for " +
                                std::to_string(g.nonsink_count()) + " non-sink vertices (limit " +
                                std::to_string(scan_limit) + ")");
    }
}

// Applies c + sign * delta_A in place over a scratch copy.
Configuration cluster(const Graph& g, const Configuration& c, const std::vector<int>& a, int sign) {
    Configuration out = c;
    for (int v : a) {
        if (v < 1 || v > g.nonsink_count()) {
            throw std::out_of_range("cluster vertex " + std::to_string(v) + " out of range");
        }
        out.heights[v - 1] += sign * g.degree(v);
        for (int w : g.neighbors(v)) {
            if (w != g.sink()) out.heights[w - 1] -= sign;
        }
    }
    return out;
}

// Shared scan: the minimal non-empty A with c + sign*delta_A stable.
std::optional<std::vector<int>> minimal_cluster(const Graph& g, const Configuration& c, int sign,
                                                int scan_limit, const char* op) {
    require_stable(g, c, op);
    require_scan_size(g, scan_limit, op);
    const int n = g.nonsink_count();
    std::vector<int> subset;
    while (advance_subset(subset, n)) {
        if (is_stable(g, cluster(g, c, subset, sign))) return subset;
    }
    return std::nullopt;
}

}  // namespace

bool advance_subset(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    // next k-combination in lexicographic order
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < n - (k - 1 - i)) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    // cardinality step
    if (k == n) return false;
    s.resize(k + 1);
    for (int i = 0; i <= k; ++i) s[i] = i + 1;
    return true;
}

std::optional<SubsetCursor> next_subset(const SubsetCursor& cur) {
    if (cur.universe < 0) throw std::invalid_argument("subset cursor universe must be >= 0");
    SubsetCursor next = cur;
    if (!advance_subset(next.current, next.universe)) return std::nullopt;
    return next;
}

Configuration add_cluster(const Graph& g, const Configuration& c, const std::vector<int>& a) {
    return cluster(g, c, a, +1);
}

Configuration subtract_cluster(const Graph& g, const Configuration& c, const std::vector<int>& a) {
    return cluster(g, c, a, -1);
}

std::optional<std::vector<int>> psi_cluster(const Graph& g, const Configuration& c,
                                            int scan_limit) {
    return minimal_cluster(g, c, +1, scan_limit, "psi");
}

std::optional<std::vector<int>> phi_cluster(const Graph& g, const Configuration& c,
                                            int scan_limit) {
    return minimal_cluster(g, c, -1, scan_limit, "phi");
}

Configuration psi(const Graph& g, const Configuration& c, int scan_limit) {
    auto a = psi_cluster(g, c, scan_limit);
    return a ? add_cluster(g, c, *a) : c;
}

Configuration phi(const Graph& g, const Configuration& c, int scan_limit) {
    auto a = phi_cluster(g, c, scan_limit);
    return a ? subtract_cluster(g, c, *a) : c;
}

Configuration beta(const Graph& g, const Configuration& c) {
    if (c.size() != g.nonsink_count()) {
        throw std::invalid_argument("beta: configuration size mismatch");
    }
    Configuration out = c;
    for (int v = 1; v <= g.nonsink_count(); ++v) {
        out.heights[v - 1] = (g.degree(v) - 1) - c.heights[v - 1];
    }
    return out;
}

NormalizeResult normalize(const Graph& g, const Configuration& c, NormalizeTarget target,
                          bool record_trajectory, int scan_limit) {
    require_stable(g, c, "normalize");
    NormalizeResult res;
    res.fixed_point = c;
    if (record_trajectory) res.trajectory.push_back(c);

    // an upper bound on the number of stable configurations, as a safety net
    long long bound = 1;
    for (int v = 1; v <= g.nonsink_count() && bound < (1LL << 40); ++v) bound *= g.degree(v);

    while (true) {
        Configuration next = target == NormalizeTarget::Recurrent
                                 ? psi(g, res.fixed_point, scan_limit)
                                 : phi(g, res.fixed_point, scan_limit);
        if (next == res.fixed_point) break;
        res.fixed_point = std::move(next);
        ++res.steps;
        if (record_trajectory) res.trajectory.push_back(res.fixed_point);
        if (res.steps > bound) throw std::logic_error("normalize failed to reach a fixed point");
    }
    return res;
}

}  // namespace sandpile
