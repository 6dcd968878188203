#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sandpile/bipartite.hpp"

namespace sandpile {

/// Word over {N, E} encoding a monotone lattice path.
struct BinomialWord {
    std::string letters;
    int e_count = 0;
    int n_count = 0;

    bool operator==(const BinomialWord&) const = default;
    bool operator<(const BinomialWord& o) const { return letters < o.letters; }
    int size() const { return static_cast<int>(letters.size()); }
};

/// Validates the alphabet and records the letter tallies.
BinomialWord make_word(std::string letters);

enum class WordTransform { Reverse, Complement };

/// Reverse the letter order, or swap N <-> E. Both are involutions.
BinomialWord word_transform(const BinomialWord& w, WordTransform t);

struct GridPoint {
    long long x = 0;
    long long y = 0;

    bool operator==(const GridPoint&) const = default;
    auto operator<=>(const GridPoint&) const = default;
};

/// A pair of bi-infinite periodic paths with an anchored frame.
///
/// The red path repeats N+upper and advances by (m-1, n) per period; the
/// green path repeats E+lower and advances by (m, n). Period zero of both
/// starts at the origin, so (0,0) is always a stable intersection. For a
/// pair standing for K_{m,n}, upper has m-1 E's and n-1 N's while lower has
/// m-1 E's and n N's; m >= 2 is required.
///
/// The paths are never materialized: step coordinates are resolved from
/// per-period prefix tables extended by the period vectors, so lookups cost
/// O(1) after O(m+n) construction.
///
/// Step labels follow the periodic labelling. On the green path, east steps
/// are labelled by start abscissa and north steps by start ordinate; on the
/// red path, north steps are labelled by start ordinate and east steps by
/// start abscissa. Each label is hit exactly once over the whole path.
class FramedPair {
public:
    FramedPair(BinomialWord upper, BinomialWord lower, GridPoint anchor = {0, 0});

    const BinomialWord& upper() const { return upper_; }
    const BinomialWord& lower() const { return lower_; }
    GridPoint anchor() const { return anchor_; }
    int m() const { return m_; }
    int n() const { return n_; }

    FramedPair with_anchor(GridPoint y) const { return FramedPair(upper_, lower_, y); }

    long long green_east_y(long long j) const;   // ordinate of green east step with abscissa j
    long long green_north_x(long long i) const;  // abscissa of green north step with ordinate i
    long long red_north_x(long long i) const;    // abscissa of red north step with ordinate i
    long long red_east_y(long long j) const;     // ordinate of red east step with abscissa j

    bool operator==(const FramedPair& o) const {
        return upper_ == o.upper_ && lower_ == o.lower_ && anchor_ == o.anchor_;
    }

private:
    BinomialWord upper_, lower_;
    GridPoint anchor_;
    int m_ = 0, n_ = 0;
    std::vector<int> green_ey_;  // ordinate of k-th east step of E+lower, k < m
    std::vector<int> green_nx_;  // abscissa of k-th north step of E+lower, k < n
    std::vector<int> red_nx_;    // abscissa of k-th north step of N+upper, k < n
    std::vector<int> red_ey_;    // ordinate of k-th east step of N+upper, k < m-1
};

/// Relative position of green east step j against the red north step at the
/// same ordinate; zero exactly at stable intersections, and
/// pos(j + m) = pos(j) + 1. Ignores the anchor.
long long pos(const FramedPair& p, long long j);

/// Sum of pos over one period window starting at j; increases by one per
/// unit shift of j.
long long cumuledpos(const FramedPair& p, long long j);

/// The m stable intersections, ordered by strictly decreasing coordinates.
/// By default they are reported relative to the smallest one (the parking
/// frame position), which lands the last entry at the origin; pass
/// normalized = false for raw path coordinates.
std::vector<GridPoint> stable_intersections(const FramedPair& p, bool normalized = true);

/// True iff y lies on both paths, followed by N on the red path and E on
/// the green path.
bool is_stable_intersection(const FramedPair& p, GridPoint y);
bool is_stable_intersection(const FramedPair& p);  // at the anchor

/// The sorted configuration read off by the frame at the anchor.
SortedBipartiteConfig measure_frame(const FramedPair& p);

/// The framed pair whose measurement at the origin is c. Requires a stable
/// input; the anchor is then a stable intersection.
FramedPair config_to_framed_pair(const SortedBipartiteConfig& c);

enum class JumpDirection { Next, Prev };

/// Moves the anchor to the next (realizes phi) or preceding (realizes psi)
/// stable intersection, staying put at the extremes. The anchor must be a
/// stable intersection.
FramedPair jump(const FramedPair& p, JumpDirection dir);

using WordPair = std::pair<BinomialWord, BinomialWord>;

/// The m word pairs read off after each stable intersection of the
/// bi-infinite pair of (upper, lower); contains (upper, lower) itself.
/// Ordered from the largest stable intersection down.
std::vector<WordPair> cyclic_part(const BinomialWord& upper, const BinomialWord& lower);

/// Two lattice paths from (0,0) to (m,n) touching only at their endpoints.
/// The upper word has shape N..E, the lower one shape E..N.
struct Polyomino {
    BinomialWord upper;
    BinomialWord lower;
    int m = 0;
    int n = 0;

    bool operator==(const Polyomino&) const = default;
};

/// Validating constructor; requires is_polyomino(upper, lower).
Polyomino make_polyomino(BinomialWord upper, BinomialWord lower);

/// True iff the two equal-tally words describe paths from (0,0) meeting
/// only at the endpoints, with the upper one starting N and ending E and
/// the lower one starting E and ending N.
bool is_polyomino(const BinomialWord& upper, const BinomialWord& lower);

/// The unique member of the part of (upper, lower) that describes a
/// polyomino: the one extracted at the last stable intersection.
Polyomino polyomino_of_part(const BinomialWord& upper, const BinomialWord& lower);

}  // namespace sandpile
