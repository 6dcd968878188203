#include "doctest.h"

#include <map>

#include "sandpile/operators.hpp"
#include "sandpile/verify.hpp"
#include "test_support.hpp"

using namespace sandpile;
using test::conf;
using test::example_graph;

TEST_CASE("subset scan order on three elements") {
    SubsetCursor cur{3, {}};
    std::vector<std::vector<int>> seen;
    while (auto next = next_subset(cur)) {
        cur = *next;
        seen.push_back(cur.current);
    }
    std::vector<std::vector<int>> expected{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    CHECK(seen == expected);
}

TEST_CASE("psi on the example graph") {
    Graph g = example_graph();
    Configuration expected = conf({1, 1, 0, 0, 2, 2});
    CHECK(psi(g, conf({0, 0, 2, 0, 2, 2})) == expected);
    CHECK(psi_cluster(g, conf({0, 0, 2, 0, 2, 2})) == std::vector<int>{1, 2});
    CHECK(psi(g, conf({1, 1, 0, 2, 0, 0})) == expected);
    CHECK(psi_cluster(g, conf({1, 1, 0, 2, 0, 0})) == std::vector<int>{5, 6});
    CHECK_THROWS_AS(psi(g, conf({0, 0, 2, 1, -1, 3})), std::domain_error);
}

TEST_CASE("psi is not injective on non-recurrent configurations") {
    Graph g = example_graph();
    Configuration a = conf({0, 0, 2, 0, 2, 2});
    Configuration b = conf({1, 1, 0, 2, 0, 0});
    CHECK(a != b);
    CHECK_FALSE(is_recurrent(g, a));
    CHECK_FALSE(is_recurrent(g, b));
    CHECK(psi(g, a) == psi(g, b));
}

TEST_CASE("phi on the example graph") {
    Graph g = example_graph();
    CHECK(phi(g, conf({1, 1, 0, 0, 2, 2})) == conf({0, 0, 2, 0, 2, 2}));
    CHECK(phi_cluster(g, conf({1, 1, 0, 0, 2, 2})) == std::vector<int>{1, 2});
    CHECK(phi(g, conf({0, 0, 0, 0, 0, 0})) == conf({0, 0, 0, 0, 0, 0}));

    Graph k11(2, {{1, 2}});
    CHECK(phi(k11, conf({0})) == conf({0}));
}

TEST_CASE("fixed points characterize recurrent and parking configurations") {
    for (const Graph& g : verify::small_graph_family(4)) {
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            CHECK((psi(g, c) == c) == is_recurrent(g, c));
            CHECK((phi(g, c) == c) == is_parking(g, c));
        }
    }
}

TEST_CASE("beta") {
    Graph g = example_graph();
    CHECK(beta(g, conf({0, 0, 2, 0, 2, 2})) == conf({1, 1, 0, 2, 0, 0}));

    Configuration delta = conf({1, 1, 2, 2, 2, 2});  // degrees minus one
    CHECK(beta(g, delta) == conf({0, 0, 0, 0, 0, 0}));
    for (const Configuration& c : {conf({1, 0, 2, 1, 0, 2}), conf({0, 1, 1, 1, 2, 0})}) {
        CHECK(beta(g, beta(g, c)) == c);
    }
}

TEST_CASE("phi.beta equals beta.psi") {
    for (const Graph& g : verify::small_graph_family(4)) {
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            CHECK(phi(g, beta(g, c)) == beta(g, psi(g, c)));
        }
    }
}

TEST_CASE("psi decreases and phi increases the full distance-profile order") {
    // the full profile starts with the sink height itself, which moves by
    // the number of cluster-to-sink edges; the stored profile only breaks
    // ties past that entry
    for (const Graph& g : verify::small_graph_family(4)) {
        auto sink_edges = [&](const std::vector<int>& cluster) {
            int count = 0;
            for (int v : cluster) count += g.has_edge(v, g.sink()) ? 1 : 0;
            return count;
        };
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            if (!is_recurrent(g, c)) {
                auto a = psi_cluster(g, c);
                REQUIRE(a.has_value());
                if (sink_edges(*a) == 0) {
                    CHECK(compare_lt2(g, psi(g, c), c) == std::strong_ordering::less);
                }
            }
            if (!is_parking(g, c)) {
                auto a = phi_cluster(g, c);
                REQUIRE(a.has_value());
                if (sink_edges(*a) == 0) {
                    CHECK(compare_lt2(g, c, phi(g, c)) == std::strong_ordering::less);
                }
            }
        }
    }
}

TEST_CASE("the operators preserve the toppling class") {
    for (const Graph& g : verify::small_graph_family(4)) {
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            CHECK(verify::class_residue(g, psi(g, c)) == verify::class_residue(g, c));
            CHECK(verify::class_residue(g, phi(g, c)) == verify::class_residue(g, c));
        }
    }
}

TEST_CASE("normalize reaches the class fixed points") {
    Graph g = example_graph();
    Configuration c = conf({0, 0, 2, 0, 2, 2});

    NormalizeResult to_rec = normalize(g, c, NormalizeTarget::Recurrent, true);
    CHECK(is_recurrent(g, to_rec.fixed_point));
    CHECK(verify::class_residue(g, to_rec.fixed_point) == verify::class_residue(g, c));
    CHECK(to_rec.steps >= 1);
    CHECK(static_cast<int>(to_rec.trajectory.size()) == to_rec.steps + 1);
    CHECK(to_rec.trajectory.front() == c);
    CHECK(to_rec.trajectory.back() == to_rec.fixed_point);

    NormalizeResult to_park = normalize(g, c, NormalizeTarget::Parking);
    CHECK(is_parking(g, to_park.fixed_point));
    CHECK(verify::class_residue(g, to_park.fixed_point) == verify::class_residue(g, c));
    CHECK(to_park.trajectory.empty());

    // fixed points normalize to themselves in zero steps
    CHECK(normalize(g, to_rec.fixed_point, NormalizeTarget::Recurrent).steps == 0);
    CHECK(normalize(g, to_park.fixed_point, NormalizeTarget::Parking).steps == 0);
}

TEST_CASE("normalize step counts stay within the stable-configuration count") {
    for (const Graph& g : verify::small_graph_family(4)) {
        const long long stable_count =
            static_cast<long long>(verify::all_stable_configurations(g).size());
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            CHECK(normalize(g, c, NormalizeTarget::Recurrent).steps <= stable_count);
            CHECK(normalize(g, c, NormalizeTarget::Parking).steps <= stable_count);
        }
    }
}

TEST_CASE("the subset scan refuses oversized graphs") {
    Graph g = example_graph();
    CHECK_THROWS_AS(psi(g, conf({0, 0, 0, 0, 0, 0}), 3), std::domain_error);
    CHECK_THROWS_AS(phi(g, conf({0, 0, 0, 0, 0, 0}), 3), std::domain_error);
    CHECK_NOTHROW(psi(g, conf({0, 0, 0, 0, 0, 0}), 6));
}
