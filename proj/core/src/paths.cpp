#include "sandpile/paths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace sandpile {

namespace {

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

// prefix tables over one period word: coordinate of the k-th occurrence of
// `letter`, counting the opposite letter before it
std::vector<int> cross_counts(const std::string& period, char letter) {
    std::vector<int> table;
    int other = 0;
    for (char ch : period) {
        if (ch == letter) {
            table.push_back(other);
        } else {
            ++other;
        }
    }
    return table;
}

// index in the period word of the k-th occurrence of `letter`
std::vector<int> letter_positions(const std::string& period, char letter) {
    std::vector<int> table;
    for (int i = 0; i < static_cast<int>(period.size()); ++i) {
        if (period[i] == letter) table.push_back(i);
    }
    return table;
}

}  // namespace

BinomialWord make_word(std::string letters) {
    BinomialWord w;
    for (char ch : letters) {
        if (ch == 'E') {
            ++w.e_count;
        } else if (ch == 'N') {
            ++w.n_count;
        } else {
            throw std::invalid_argument(std::string("binomial words use letters N and E, got '") +
                                        ch + "'");
        }
    }
    w.letters = std::move(letters);
    return w;
}

BinomialWord word_transform(const BinomialWord& w, WordTransform t) {
    BinomialWord out = w;
    if (t == WordTransform::Reverse) {
        std::reverse(out.letters.begin(), out.letters.end());
    } else {
        for (char& ch : out.letters) ch = (ch == 'E') ? 'N' : 'E';
        std::swap(out.e_count, out.n_count);
    }
    return out;
}

FramedPair::FramedPair(BinomialWord upper, BinomialWord lower, GridPoint anchor)
    : upper_(std::move(upper)), lower_(std::move(lower)), anchor_(anchor) {
    m_ = upper_.e_count + 1;
    n_ = upper_.n_count + 1;
    if (m_ < 2) {
        throw std::invalid_argument("framed pair needs m >= 2 (upper word without east steps)");
    }
    if (lower_.e_count != m_ - 1 || lower_.n_count != n_) {
        throw std::invalid_argument("framed pair tally mismatch: upper " +
                                    std::to_string(upper_.e_count) + "E/" +
                                    std::to_string(upper_.n_count) + "N needs lower " +
                                    std::to_string(m_ - 1) + "E/" + std::to_string(n_) + "N");
    }
    const std::string green = "E" + lower_.letters;  // period (m, n)
    const std::string red = "N" + upper_.letters;    // period (m-1, n)
    green_ey_ = cross_counts(green, 'E');
    green_nx_ = cross_counts(green, 'N');
    red_nx_ = cross_counts(red, 'N');
    red_ey_ = cross_counts(red, 'E');
}

long long FramedPair::green_east_y(long long j) const {
    long long q = floordiv(j, m_);
    return q * n_ + green_ey_[static_cast<size_t>(j - q * m_)];
}

long long FramedPair::green_north_x(long long i) const {
    long long q = floordiv(i, n_);
    return q * m_ + green_nx_[static_cast<size_t>(i - q * n_)];
}

long long FramedPair::red_north_x(long long i) const {
    long long q = floordiv(i, n_);
    return q * (m_ - 1) + red_nx_[static_cast<size_t>(i - q * n_)];
}

long long FramedPair::red_east_y(long long j) const {
    long long q = floordiv(j, m_ - 1);
    return q * n_ + red_ey_[static_cast<size_t>(j - q * (m_ - 1))];
}

long long pos(const FramedPair& p, long long j) {
    return j - p.red_north_x(p.green_east_y(j));
}

long long cumuledpos(const FramedPair& p, long long j) {
    long long sum = 0;
    for (int k = 0; k < p.m(); ++k) sum += pos(p, j + k);
    return sum;
}

std::vector<GridPoint> stable_intersections(const FramedPair& p, bool normalized) {
    // pos grows by one per period, so each residue class of east steps
    // crosses zero exactly once
    std::vector<GridPoint> points;
    points.reserve(p.m());
    for (int k = 0; k < p.m(); ++k) {
        long long j = k - static_cast<long long>(p.m()) * pos(p, k);
        points.push_back({j, p.green_east_y(j)});
    }
    std::sort(points.begin(), points.end(),
              [](const GridPoint& a, const GridPoint& b) { return a.x > b.x; });
    if (normalized) {
        GridPoint base = points.back();
        for (GridPoint& z : points) {
            z.x -= base.x;
            z.y -= base.y;
        }
    }
    return points;
}

bool is_stable_intersection(const FramedPair& p, GridPoint y) {
    return p.green_east_y(y.x) == y.y && p.red_north_x(y.y) == y.x;
}

bool is_stable_intersection(const FramedPair& p) { return is_stable_intersection(p, p.anchor()); }

SortedBipartiteConfig measure_frame(const FramedPair& p) {
    const GridPoint y = p.anchor();
    std::vector<int> nonsink(p.n());
    std::vector<int> sinkpart(p.m() - 1);
    for (int i = 0; i < p.n(); ++i) {
        nonsink[i] = static_cast<int>(p.green_north_x(y.y + i) - y.x - 1);
    }
    for (int j = 0; j < p.m() - 1; ++j) {
        sinkpart[j] = static_cast<int>(p.red_east_y(y.x + j) - y.y - 1);
    }
    return make_sorted_bipartite(p.m(), p.n(), std::move(nonsink), std::move(sinkpart));
}

FramedPair config_to_framed_pair(const SortedBipartiteConfig& c) {
    if (!is_stable(c)) {
        throw std::domain_error("config_to_framed_pair requires a stable configuration");
    }
    std::string upper;
    int prev = 0;
    for (int h : c.sinkpart) {
        upper.append(h - prev, 'N');
        upper.push_back('E');
        prev = h;
    }
    upper.append((c.n - 1) - prev, 'N');

    std::string lower;
    prev = 0;
    for (int h : c.nonsink) {
        lower.append(h - prev, 'E');
        lower.push_back('N');
        prev = h;
    }
    lower.append((c.m - 1) - prev, 'E');

    return FramedPair(make_word(std::move(upper)), make_word(std::move(lower)), {0, 0});
}

FramedPair jump(const FramedPair& p, JumpDirection dir) {
    if (!is_stable_intersection(p)) {
        throw std::domain_error("jump requires the anchor to be a stable intersection");
    }
    std::vector<GridPoint> zs = stable_intersections(p, /*normalized=*/false);
    int at = -1;
    for (int i = 0; i < static_cast<int>(zs.size()); ++i) {
        if (zs[i] == p.anchor()) at = i;
    }
    if (at < 0) throw std::logic_error("anchor not found among stable intersections");
    // the list is ordered with decreasing coordinates; phi walks down it
    if (dir == JumpDirection::Next) {
        if (at + 1 < static_cast<int>(zs.size())) return p.with_anchor(zs[at + 1]);
    } else {
        if (at > 0) return p.with_anchor(zs[at - 1]);
    }
    return p;
}

namespace {

// Letters of `count` steps of the periodic word starting after step `step`.
std::string factor_after_step(const std::string& period, long long step, int count) {
    std::string out;
    out.reserve(count);
    const long long len = static_cast<long long>(period.size());
    for (int t = 1; t <= count; ++t) {
        long long s = step + t;
        out.push_back(period[static_cast<size_t>(s - floordiv(s, len) * len)]);
    }
    return out;
}

}  // namespace

std::vector<WordPair> cyclic_part(const BinomialWord& upper, const BinomialWord& lower) {
    FramedPair p(upper, lower);
    const int m = p.m(), n = p.n();
    const std::string red = "N" + upper.letters;
    const std::string green = "E" + lower.letters;
    const std::vector<int> red_n_at = letter_positions(red, 'N');
    const std::vector<int> green_e_at = letter_positions(green, 'E');

    std::vector<WordPair> part;
    for (GridPoint z : stable_intersections(p, /*normalized=*/false)) {
        // the red north step starting at z is the one with ordinate z.y
        long long qr = floordiv(z.y, n);
        long long red_step = qr * (m + n - 1) + red_n_at[static_cast<size_t>(z.y - qr * n)];
        // the green east step starting at z has abscissa z.x
        long long qg = floordiv(z.x, m);
        long long green_step = qg * (m + n) + green_e_at[static_cast<size_t>(z.x - qg * m)];
        part.emplace_back(make_word(factor_after_step(red, red_step, m + n - 2)),
                          make_word(factor_after_step(green, green_step, m + n - 1)));
    }
    return part;
}

bool is_polyomino(const BinomialWord& upper, const BinomialWord& lower) {
    if (upper.e_count != lower.e_count || upper.n_count != lower.n_count) {
        throw std::invalid_argument("is_polyomino: tally mismatch between the two words");
    }
    if (upper.size() == 0) return false;
    if (upper.letters.front() != 'N' || upper.letters.back() != 'E') return false;
    if (lower.letters.front() != 'E' || lower.letters.back() != 'N') return false;

    auto vertices = [](const std::string& w) {
        std::vector<std::pair<int, int>> vs{{0, 0}};
        int x = 0, y = 0;
        for (char ch : w) {
            (ch == 'E' ? x : y) += 1;
            vs.emplace_back(x, y);
        }
        return vs;
    };
    std::vector<std::pair<int, int>> a = vertices(upper.letters);
    std::vector<std::pair<int, int>> b = vertices(lower.letters);
    std::set<std::pair<int, int>> seen(a.begin(), a.end());
    for (size_t i = 1; i + 1 < b.size(); ++i) {
        if (seen.count(b[i])) return false;  // interior touch
    }
    return true;
}

Polyomino make_polyomino(BinomialWord upper, BinomialWord lower) {
    if (!is_polyomino(upper, lower)) {
        throw std::invalid_argument("the two paths do not describe a parallelogram polyomino");
    }
    Polyomino p;
    p.m = upper.e_count;
    p.n = upper.n_count;
    p.upper = std::move(upper);
    p.lower = std::move(lower);
    return p;
}

Polyomino polyomino_of_part(const BinomialWord& upper, const BinomialWord& lower) {
    // the polyomino member sits at the last stable intersection, which is
    // the head of the decreasing intersection list
    std::vector<WordPair> part = cyclic_part(upper, lower);
    const WordPair& head = part.front();
    return make_polyomino(make_word("N" + head.first.letters + "E"),
                          make_word("E" + head.second.letters));
}

}  // namespace sandpile
