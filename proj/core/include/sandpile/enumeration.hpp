#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "sandpile/paths.hpp"

namespace sandpile {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient.
BigInt binomial(long long a, long long b);

/// All words with the given tallies, in lexicographic order (E < N).
std::vector<BinomialWord> binomial_words(int e_count, int n_count);

/// Number of parallelogram polyominoes with an m x n bounding box:
/// C(m+n-2, m-1) * C(m+n-1, m-1) / m. The division is checked to be exact
/// and the value is cross-checked against the 2x2 path-pair determinant.
BigInt count_polyominoes_formula(long long m, long long n);

inline constexpr int kEnumerationSizeBound = 14;   // bound on m+n
inline constexpr int kCyclicLemmaSizeBound = 10;   // bound on m+n, exhaustive mode

/// Brute-force enumeration of all m x n parallelogram polyominoes, in
/// lexicographic order of (upper, lower). Throws when m+n exceeds the
/// bound. With threads > 1 the scan fans out over upper words; chunks are
/// concatenated in order, so the output does not depend on the thread count.
std::vector<Polyomino> enumerate_polyominoes(int m, int n,
                                             int size_bound = kEnumerationSizeBound,
                                             int threads = 1);

/// True iff E+w can be split as f g with g f = p. Requires |w| + 1 = |p|.
bool cyc_matches(const BinomialWord& w, const BinomialWord& p);

enum class PatternKind { Simple, Double };

/// Closed-form counts for polyominoes with lower path (E^a N^b)^c
/// (Simple: C(c(a+b)-2, ca-1) / c) or (E^a N^a E^b N^b)^c
/// (Double: C(2c(a+b)-2, c(a+b)-1) / 2c, only claimed for a != b).
BigInt count_pattern_formula(long long a, long long b, long long c, PatternKind kind);

/// All polyominoes whose lower path is exactly p (p must start with E and
/// end with N), in lexicographic order of the upper word.
std::vector<Polyomino> enumerate_pattern(const BinomialWord& p,
                                         int size_bound = kEnumerationSizeBound);

struct CyclicLemmaReport {
    int m = 0;
    int n = 0;
    bool exhaustive = true;
    long long pairs_checked = 0;
    long long parts = 0;              // distinct parts seen (exhaustive mode)
    bool all_parts_size_m = false;
    bool one_polyomino_per_part = false;
    bool reflexive = false;           // every pair occurs in its own part
    bool partition_consistent = false;  // members of a part agree on the part
    bool count_matches_formula = false;  // parts * m == total pairs == m * formula
    bool ok = false;
};

/// Checks the partition of word pairs by stable intersections: every part
/// has exactly m members, contains its generator, is member-consistent and
/// holds exactly one polyomino. Exhaustive over all of B_{m-1,n-1} x
/// B_{m-1,n} by default (m+n capped by size_bound), or over `sample` seeded
/// random pairs.
CyclicLemmaReport verify_cyclic_lemma(int m, int n,
                                      std::optional<long long> sample = std::nullopt,
                                      int size_bound = kCyclicLemmaSizeBound,
                                      unsigned seed = 1);

}  // namespace sandpile
