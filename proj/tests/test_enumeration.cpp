#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "sandpile/enumeration.hpp"

using namespace sandpile;

namespace {

std::string repeat(const std::string& block, int times) {
    std::string s;
    for (int i = 0; i < times; ++i) s += block;
    return s;
}

}  // namespace

TEST_CASE("binomial coefficients are exact") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    for (long long n = 1; n <= 40; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("word generation is lexicographic and complete") {
    std::vector<BinomialWord> words = binomial_words(2, 1);
    REQUIRE(words.size() == 3);
    CHECK(words[0].letters == "EEN");
    CHECK(words[1].letters == "ENE");
    CHECK(words[2].letters == "NEE");
}

TEST_CASE("polyomino counting formula") {
    CHECK(count_polyominoes_formula(2, 2) == 3);
    CHECK(count_polyominoes_formula(3, 3) == 20);
    for (int n = 1; n <= 5; ++n) {
        CHECK(count_polyominoes_formula(1, n) == 1);
        CHECK(count_polyominoes_formula(n, 1) == 1);
    }
    // the determinant cross-check runs inside; large boxes need big integers
    for (int m = 1; m <= 30; ++m) {
        for (int n = 1; n <= 30; ++n) CHECK_NOTHROW(count_polyominoes_formula(m, n));
    }
    CHECK(count_polyominoes_formula(30, 30) == BigInt("59264878189456612643708120014016"));
}

TEST_CASE("brute-force enumeration of small boxes") {
    std::vector<Polyomino> small = enumerate_polyominoes(2, 2);
    REQUIRE(small.size() == 3);
    CHECK(small[0] == make_polyomino(make_word("NENE"), make_word("EENN")));
    CHECK(small[1] == make_polyomino(make_word("NNEE"), make_word("EENN")));
    CHECK(small[2] == make_polyomino(make_word("NNEE"), make_word("ENEN")));

    std::vector<Polyomino> unit = enumerate_polyominoes(1, 1);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].upper.letters == "NE");
    CHECK(unit[0].lower.letters == "EN");

    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; m + n <= 8; ++n) {
            CHECK(BigInt(enumerate_polyominoes(m, n).size()) == count_polyominoes_formula(m, n));
        }
    }

    CHECK_THROWS_AS(enumerate_polyominoes(8, 8), std::domain_error);
}

TEST_CASE("the paper box contains the figure polyomino") {
    std::vector<Polyomino> all = enumerate_polyominoes(4, 6);
    Polyomino figure = make_polyomino(make_word("NENNNENNEE"), make_word("EENENNENNN"));
    CHECK(std::count(all.begin(), all.end(), figure) == 1);
    CHECK(BigInt(all.size()) == count_polyominoes_formula(4, 6));
}

TEST_CASE("parallel enumeration output is byte-identical") {
    std::vector<Polyomino> serial = enumerate_polyominoes(4, 4);
    CHECK(enumerate_polyominoes(4, 4, kEnumerationSizeBound, 3) == serial);
    CHECK(enumerate_polyominoes(4, 4, kEnumerationSizeBound, 8) == serial);
}

TEST_CASE("cyclic pattern matching") {
    CHECK(cyc_matches(make_word("NEN"), make_word("ENEN")));
    CHECK_FALSE(cyc_matches(make_word("NNE"), make_word("ENEN")));
    CHECK_THROWS_AS(cyc_matches(make_word("N"), make_word("ENEN")), std::invalid_argument);

    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 2; ++c) {
                BinomialWord p = make_word(repeat(std::string(a, 'E') + std::string(b, 'N'), c));
                int matches = 0;
                for (const BinomialWord& w : binomial_words(c * a - 1, c * b)) {
                    if (cyc_matches(w, p)) ++matches;
                }
                CHECK(matches == a);
            }
        }
    }
}

TEST_CASE("pattern counting formulas") {
    CHECK(count_pattern_formula(1, 1, 3, PatternKind::Simple) == 2);
    CHECK(count_pattern_formula(2, 1, 2, PatternKind::Simple) == 2);
    CHECK(count_pattern_formula(1, 2, 1, PatternKind::Double) == 3);
    CHECK_THROWS_AS(count_pattern_formula(2, 2, 1, PatternKind::Double), std::invalid_argument);
    CHECK_THROWS_AS(count_pattern_formula(0, 1, 1, PatternKind::Simple), std::invalid_argument);
}

TEST_CASE("pattern-restricted enumeration") {
    CHECK(enumerate_pattern(make_word("ENENEN")).size() == 2);  // Dyck words of semi-length 2
    CHECK(enumerate_pattern(make_word("EENN")).size() == 2);
    CHECK(enumerate_pattern(make_word("EN")).size() == 1);
    CHECK_THROWS_AS(enumerate_pattern(make_word("NE")), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pattern(make_word("ENE")), std::invalid_argument);

    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 3 && c * (a + b) <= 8; ++c) {
                BinomialWord p = make_word(repeat(std::string(a, 'E') + std::string(b, 'N'), c));
                CHECK(BigInt(enumerate_pattern(p).size()) ==
                      count_pattern_formula(a, b, c, PatternKind::Simple));
            }
        }
    }
}

TEST_CASE("the double-pattern count is symmetric in its two blocks") {
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 1}}) {
        BinomialWord p = make_word(repeat(std::string(a, 'E') + std::string(a, 'N') +
                                              std::string(b, 'E') + std::string(b, 'N'),
                                          1));
        BinomialWord q = make_word(repeat(std::string(b, 'E') + std::string(b, 'N') +
                                              std::string(a, 'E') + std::string(a, 'N'),
                                          1));
        CHECK(enumerate_pattern(p).size() == enumerate_pattern(q).size());
    }
}

TEST_CASE("restricted partition: one fixed-pattern polyomino per part") {
    // lower periods cyclically matching (E^2 N)^2 paired with any upper word
    const int a = 2, b = 1, c = 2;
    BinomialWord p = make_word(repeat(std::string(a, 'E') + std::string(b, 'N'), c));
    for (const BinomialWord& u : binomial_words(c * a - 1, c * b - 1)) {
        for (const BinomialWord& w : binomial_words(c * a - 1, c * b)) {
            if (!cyc_matches(w, p)) continue;
            Polyomino chosen = polyomino_of_part(u, w);
            CHECK(chosen.lower == p);
        }
    }
}

TEST_CASE("cyclic lemma verification report") {
    CyclicLemmaReport r = verify_cyclic_lemma(2, 2);
    CHECK(r.ok);
    CHECK(r.pairs_checked == 6);
    CHECK(r.parts == 3);
    CHECK(r.exhaustive);

    CyclicLemmaReport sampled = verify_cyclic_lemma(4, 6, 25);
    CHECK(sampled.ok);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.pairs_checked == 25);

    CHECK_THROWS_AS(verify_cyclic_lemma(6, 6), std::domain_error);
    CHECK_NOTHROW(verify_cyclic_lemma(6, 6, 5));
}
