#include "doctest.h"

#include "sandpile/bipartite.hpp"
#include "sandpile/operators.hpp"
#include "test_support.hpp"

using namespace sandpile;
using test::all_sorted_stable;
using test::bip;

TEST_CASE("bipartite configuration validation") {
    CHECK_THROWS_AS(make_sorted_bipartite(1, 3, {0, 0, 0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_sorted_bipartite(3, 2, {0, 0, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_sorted_bipartite(3, 2, {1, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_sorted_bipartite(3, 2, {0, 1}, {1, 0}), std::invalid_argument);
    CHECK_NOTHROW(make_sorted_bipartite(2, 1, {0}, {0}));

    CHECK(is_stable(bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 5})));
    CHECK_FALSE(is_stable(bip(4, 6, {1, 2, 2, 3, 3, 4}, {0, 3, 5})));
    CHECK_FALSE(is_stable(bip(4, 6, {-1, 2, 2, 3, 3, 3}, {0, 3, 5})));
    CHECK_FALSE(is_stable(bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 6})));
}

TEST_CASE("sorted toppling in closed form") {
    SortedBipartiteConfig c = bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 5});
    CHECK(t_nonsink(c) == bip(4, 6, {-1, 1, 2, 2, 3, 3}, {1, 4, 6}));
    CHECK(t_sink(c) == bip(4, 6, {2, 3, 3, 4, 4, 4}, {-1, 0, 3}));

    SortedBipartiteConfig small = bip(2, 2, {0, 1}, {1});
    CHECK(t_nonsink(small) == bip(2, 2, {-1, 0}, {2}));
    CHECK(t_sink(small) == bip(2, 2, {1, 2}, {-1}));

    SortedBipartiteConfig wide = bip(2, 2, {0, 5}, {0});  // range 5 > m
    CHECK_THROWS_AS(t_nonsink(wide), std::domain_error);
}

TEST_CASE("sorted topplings preserve shape, commute and invert over a height window") {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            // sorted compact-range configurations with entries a few units
            // around the stable window
            auto sorted_tuples = [](int len, int lo, int hi) {
                std::vector<std::vector<int>> out;
                std::vector<int> cur(len, lo);
                for (;;) {
                    out.push_back(cur);
                    int i = len - 1;
                    while (i >= 0 && cur[i] == hi) --i;
                    if (i < 0) break;
                    int v = cur[i] + 1;
                    for (int j = i; j < len; ++j) cur[j] = v;
                }
                return out;
            };
            for (const auto& a : sorted_tuples(n, -2, m + 1)) {
                for (const auto& b : sorted_tuples(m - 1, -2, n + 1)) {
                    SortedBipartiteConfig c = bip(m, n, a, b);
                    if (!is_compact_range(c)) continue;
                    SortedBipartiteConfig ts = t_nonsink(c);
                    SortedBipartiteConfig tw = t_sink(c);
                    CHECK(is_compact_range(ts));
                    CHECK(is_compact_range(tw));
                    CHECK(t_nonsink_inv(ts) == c);
                    CHECK(t_sink_inv(tw) == c);
                    CHECK(t_nonsink(tw) == t_sink(ts));
                }
            }
        }
    }
}

TEST_CASE("phi on K_{4,6} walks the figure sequence") {
    SortedBipartiteConfig u = bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 5});
    SortedBipartiteConfig f1 = phi_kmn(u);
    CHECK(f1 == bip(4, 6, {0, 0, 1, 1, 1, 3}, {2, 4, 5}));
    SortedBipartiteConfig f2 = phi_kmn(f1);
    CHECK(f2 == bip(4, 6, {0, 1, 1, 2, 2, 2}, {0, 3, 5}));
    SortedBipartiteConfig f3 = phi_kmn(f2);
    CHECK(f3 == bip(4, 6, {0, 0, 0, 2, 3, 3}, {0, 2, 3}));
    CHECK(phi_kmn(f3) == f3);  // parking

    CHECK_THROWS_AS(phi_kmn(bip(2, 2, {0, 3}, {1})), std::domain_error);
}

TEST_CASE("psi inverts phi along the figure sequence") {
    SortedBipartiteConfig u = bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 5});
    SortedBipartiteConfig parking = bip(4, 6, {0, 0, 0, 2, 3, 3}, {0, 2, 3});
    CHECK(psi_kmn(parking) == bip(4, 6, {0, 1, 1, 2, 2, 2}, {0, 3, 5}));
    CHECK(psi_kmn(u) == u);  // recurrent
    SortedBipartiteConfig f2 = bip(4, 6, {0, 1, 1, 2, 2, 2}, {0, 3, 5});
    CHECK(psi_kmn(phi_kmn(f2)) == f2);
}

TEST_CASE("phi_kmn matches the general operator after sorting") {
    for (int m = 2; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            Graph g = make_complete_bipartite(m, n);
            for (const SortedBipartiteConfig& c : all_sorted_stable(m, n)) {
                CHECK(phi_kmn(c) == sorted_from_general(m, n, phi(g, to_general(c))));
                CHECK(psi_kmn(c) == sorted_from_general(m, n, psi(g, to_general(c))));
            }
        }
    }
}

TEST_CASE("the minimal phi cluster is a pair of index suffixes") {
    for (int m = 2; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            Graph g = make_complete_bipartite(m, n);
            for (const SortedBipartiteConfig& c : all_sorted_stable(m, n)) {
                auto cluster = phi_cluster(g, to_general(c));
                if (!cluster) continue;
                // sorted + contiguous up to n, then contiguous up to n+m-1
                auto it = cluster->begin();
                int first_nonsink = *it;
                while (it != cluster->end() && *it <= n) ++it;
                int expect = first_nonsink;
                for (auto jt = cluster->begin(); jt != it; ++jt) CHECK(*jt == expect++);
                CHECK(expect == n + 1);  // the non-sink block ends exactly at v_n
                REQUIRE(it != cluster->end());
                expect = *it;
                for (; it != cluster->end(); ++it) CHECK(*it == expect++);
                CHECK(expect == n + m);  // the sink block ends exactly at v_{n+m-1}
            }
        }
    }
}

TEST_CASE("semigroup inverse laws") {
    for (int m = 2; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            for (const SortedBipartiteConfig& c : all_sorted_stable(m, n)) {
                CHECK(psi_kmn(phi_kmn(psi_kmn(c))) == psi_kmn(c));
                CHECK(phi_kmn(psi_kmn(phi_kmn(c))) == phi_kmn(c));
            }
        }
    }
}

TEST_CASE("grades on the figure sequence") {
    SortedBipartiteConfig u = bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 5});
    CHECK(grade_kmn(u) == 3);
    CHECK(grade_kmn(phi_kmn(u)) == 2);
    CHECK(grade_kmn(bip(4, 6, {0, 1, 1, 2, 2, 2}, {0, 3, 5})) == 1);
    CHECK(grade_kmn(bip(4, 6, {0, 0, 0, 2, 3, 3}, {0, 2, 3})) == 0);
}

TEST_CASE("grades split a class into m levels") {
    for (int n = 1; n <= 4; ++n) {
        for (const SortedBipartiteConfig& c : all_sorted_stable(2, n)) {
            int grade = grade_kmn(c);
            CHECK(grade >= 0);
            CHECK(grade <= 1);
            CHECK((grade == 1) == (psi_kmn(c) == c));
            CHECK((grade == 0) == (phi_kmn(c) == c));
        }
    }
}

TEST_CASE("class walks") {
    SortedBipartiteConfig u = bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 5});
    std::vector<SortedBipartiteConfig> walk = walk_class(u);
    REQUIRE(walk.size() == 4);
    CHECK(walk[0] == u);
    CHECK(walk[1] == bip(4, 6, {0, 0, 1, 1, 1, 3}, {2, 4, 5}));
    CHECK(walk[2] == bip(4, 6, {0, 1, 1, 2, 2, 2}, {0, 3, 5}));
    CHECK(walk[3] == bip(4, 6, {0, 0, 0, 2, 3, 3}, {0, 2, 3}));

    // representative independence
    CHECK(walk_class(walk[3]) == walk);
    CHECK(walk_class(walk[2]) == walk);
    CHECK(walk[3 - grade_kmn(walk[1])] == walk[1]);
}

TEST_CASE("general round trip through configuration heights") {
    SortedBipartiteConfig c = bip(3, 2, {0, 2}, {1, 1});
    Configuration g = to_general(c);
    CHECK(g.heights == std::vector<int>{0, 2, 1, 1});
    CHECK(sorted_from_general(3, 2, g) == c);
    CHECK(sorted_from_general(3, 2, Configuration({2, 0, 1, 1})) == c);
    CHECK_THROWS_AS(sorted_from_general(3, 2, Configuration({0, 0})), std::invalid_argument);
}
