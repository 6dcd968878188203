#include "sandpile/enumeration.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace sandpile {

BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0) return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;  // exact at every step
    }
    return result;
}

std::vector<BinomialWord> binomial_words(int e_count, int n_count) {
    if (e_count < 0 || n_count < 0) throw std::invalid_argument("negative letter count");
    std::string letters(e_count, 'E');
    letters.append(n_count, 'N');
    std::vector<BinomialWord> words;
    do {
        words.push_back(make_word(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return words;
}

namespace {

BigInt checked_exact_div(const BigInt& num, long long den, const char* what) {
    if (num % den != 0) {
        throw std::logic_error(std::string(what) + ": expected exact division by " +
                               std::to_string(den));
    }
    return num / den;
}

}  // namespace

BigInt count_polyominoes_formula(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("polyomino box needs m, n >= 1");
    BigInt product = binomial(m + n - 2, m - 1) * binomial(m + n - 1, m - 1);
    BigInt count = checked_exact_div(product, m, "polyomino count");
    // the same number as a 2x2 determinant of lattice path counts
    BigInt det = binomial(m + n - 2, m - 1) * binomial(m + n - 2, m - 1) -
                 binomial(m + n - 2, m) * binomial(m + n - 2, m - 2);
    if (det != count) throw std::logic_error("polyomino determinant disagrees with the product formula");
    return count;
}

namespace {

std::vector<Polyomino> scan_uppers(const std::vector<BinomialWord>& uppers, size_t begin,
                                   size_t end, const std::vector<BinomialWord>& lowers) {
    std::vector<Polyomino> found;
    for (size_t i = begin; i < end; ++i) {
        for (const BinomialWord& lower : lowers) {
            if (is_polyomino(uppers[i], lower)) {
                found.push_back(make_polyomino(uppers[i], lower));
            }
        }
    }
    return found;
}

}  // namespace

std::vector<Polyomino> enumerate_polyominoes(int m, int n, int size_bound, int threads) {
    if (m < 1 || n < 1) throw std::invalid_argument("polyomino box needs m, n >= 1");
    if (m + n > size_bound) {
        throw std::domain_error("enumerate_polyominoes: m+n = " + std::to_string(m + n) +
                                " exceeds the bound " + std::to_string(size_bound));
    }
    std::vector<BinomialWord> uppers, lowers;
    for (const BinomialWord& u : binomial_words(m - 1, n - 1)) {
        uppers.push_back(make_word("N" + u.letters + "E"));
    }
    for (const BinomialWord& w : binomial_words(m - 1, n - 1)) {
        lowers.push_back(make_word("E" + w.letters + "N"));
    }

    const int t = std::max(1, threads);
    if (t == 1 || uppers.size() < 2 * static_cast<size_t>(t)) {
        return scan_uppers(uppers, 0, uppers.size(), lowers);
    }
    // fan out over upper-word ranges; chunks are concatenated in order so
    // the result is identical to the serial scan
    std::vector<std::future<std::vector<Polyomino>>> futures;
    const size_t chunk = (uppers.size() + t - 1) / t;
    for (size_t begin = 0; begin < uppers.size(); begin += chunk) {
        size_t end = std::min(uppers.size(), begin + chunk);
        futures.push_back(std::async(std::launch::async, scan_uppers, std::cref(uppers), begin,
                                     end, std::cref(lowers)));
    }
    std::vector<Polyomino> all;
    for (auto& f : futures) {
        std::vector<Polyomino> part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

bool cyc_matches(const BinomialWord& w, const BinomialWord& p) {
    if (w.size() + 1 != p.size()) {
        throw std::invalid_argument("cyc_matches needs |w| + 1 = |p|");
    }
    const std::string ew = "E" + w.letters;
    for (size_t split = 0; split <= ew.size(); ++split) {
        if (ew.substr(split) + ew.substr(0, split) == p.letters) return true;
    }
    return false;
}

BigInt count_pattern_formula(long long a, long long b, long long c, PatternKind kind) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("pattern parameters must be >= 1");
    if (kind == PatternKind::Simple) {
        return checked_exact_div(binomial(c * (a + b) - 2, c * a - 1), c, "simple pattern count");
    }
    if (a == b) {
        throw std::invalid_argument("the double-pattern count is only claimed for a != b");
    }
    return checked_exact_div(binomial(2 * c * (a + b) - 2, c * (a + b) - 1), 2 * c,
                             "double pattern count");
}

std::vector<Polyomino> enumerate_pattern(const BinomialWord& p, int size_bound) {
    if (p.size() < 2 || p.letters.front() != 'E' || p.letters.back() != 'N') {
        throw std::invalid_argument("pattern must start with E and end with N");
    }
    const int m = p.e_count, n = p.n_count;
    if (m + n > size_bound) {
        throw std::domain_error("enumerate_pattern: pattern box exceeds the bound");
    }
    std::vector<Polyomino> found;
    for (const BinomialWord& u : binomial_words(m - 1, n - 1)) {
        BinomialWord upper = make_word("N" + u.letters + "E");
        if (is_polyomino(upper, p)) found.push_back(make_polyomino(upper, p));
    }
    return found;
}

namespace {

bool part_checks(const BinomialWord& upper, const BinomialWord& lower, int m,
                 std::vector<WordPair>& part, bool& size_ok, bool& reflexive, bool& one_polyo) {
    part = cyclic_part(upper, lower);
    std::vector<WordPair> sorted_part = part;
    std::sort(sorted_part.begin(), sorted_part.end());
    size_ok = static_cast<int>(part.size()) == m &&
              std::adjacent_find(sorted_part.begin(), sorted_part.end()) == sorted_part.end();
    reflexive = std::find(part.begin(), part.end(), WordPair{upper, lower}) != part.end();
    int polyos = 0;
    for (const WordPair& member : part) {
        if (is_polyomino(make_word("N" + member.first.letters + "E"),
                         make_word("E" + member.second.letters))) {
            ++polyos;
        }
    }
    one_polyo = polyos == 1;
    return size_ok && reflexive && one_polyo;
}

}  // namespace

CyclicLemmaReport verify_cyclic_lemma(int m, int n, std::optional<long long> sample,
                                      int size_bound, unsigned seed) {
    if (m < 2 || n < 1) throw std::invalid_argument("verify_cyclic_lemma needs m >= 2, n >= 1");
    CyclicLemmaReport report;
    report.m = m;
    report.n = n;
    report.exhaustive = !sample.has_value();
    report.all_parts_size_m = true;
    report.reflexive = true;
    report.one_polyomino_per_part = true;

    if (!sample) {
        if (m + n > size_bound) {
            throw std::domain_error("verify_cyclic_lemma: m+n exceeds the exhaustive bound " +
                                    std::to_string(size_bound));
        }
        std::vector<BinomialWord> uppers = binomial_words(m - 1, n - 1);
        std::vector<BinomialWord> lowers = binomial_words(m - 1, n);
        // key each pair by the member read off at the largest intersection;
        // members of one part agree on it, so the key counts say whether the
        // parts really partition the pairs
        std::map<WordPair, long long> by_canonical;
        for (const BinomialWord& u : uppers) {
            for (const BinomialWord& l : lowers) {
                std::vector<WordPair> part;
                bool size_ok = false, reflexive = false, one_polyo = false;
                part_checks(u, l, m, part, size_ok, reflexive, one_polyo);
                report.all_parts_size_m &= size_ok;
                report.reflexive &= reflexive;
                report.one_polyomino_per_part &= one_polyo;
                ++by_canonical[part.front()];
                ++report.pairs_checked;
            }
        }
        report.parts = static_cast<long long>(by_canonical.size());
        report.partition_consistent = true;
        for (const auto& [key, count] : by_canonical) {
            report.partition_consistent &= count == m;
        }
        BigInt formula = count_polyominoes_formula(m, n);
        report.count_matches_formula = BigInt(report.parts) == formula &&
                                       report.parts * m == report.pairs_checked;
        report.ok = report.all_parts_size_m && report.reflexive &&
                    report.one_polyomino_per_part && report.partition_consistent &&
                    report.count_matches_formula;
        return report;
    }

    std::mt19937 rng(seed);
    auto random_word = [&rng](int e, int nn) {
        std::string s(e, 'E');
        s.append(nn, 'N');
        std::shuffle(s.begin(), s.end(), rng);
        return make_word(s);
    };
    bool member_consistent = true;
    for (long long i = 0; i < *sample; ++i) {
        BinomialWord u = random_word(m - 1, n - 1);
        BinomialWord l = random_word(m - 1, n);
        std::vector<WordPair> part;
        bool size_ok = false, reflexive = false, one_polyo = false;
        part_checks(u, l, m, part, size_ok, reflexive, one_polyo);
        report.all_parts_size_m &= size_ok;
        report.reflexive &= reflexive;
        report.one_polyomino_per_part &= one_polyo;
        // symmetry: every member reads off the same part
        for (const WordPair& member : part) {
            std::vector<WordPair> other = cyclic_part(member.first, member.second);
            std::sort(other.begin(), other.end());
            std::vector<WordPair> mine = part;
            std::sort(mine.begin(), mine.end());
            member_consistent &= other == mine;
        }
        ++report.pairs_checked;
    }
    report.partition_consistent = member_consistent;
    report.count_matches_formula = true;  // not applicable in sample mode
    report.ok = report.all_parts_size_m && report.reflexive && report.one_polyomino_per_part &&
                report.partition_consistent;
    return report;
}

}  // namespace sandpile
