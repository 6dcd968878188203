#include "doctest.h"

#include <random>

#include "sandpile/graph.hpp"
#include "sandpile/verify.hpp"
#include "test_support.hpp"

using namespace sandpile;
using test::bip;
using test::conf;
using test::example_graph;

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_AS(Graph(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}, {2, 3}}), std::invalid_argument);           // self-loop
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {1, 2}, {2, 3}}), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(Graph(4, {{1, 2}, {3, 4}}), std::invalid_argument);           // disconnected
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 4}}), std::invalid_argument);           // out of range
    CHECK_THROWS_AS(Graph(4, {{1, 2}, {2, 3}}), std::invalid_argument);           // isolated

    Graph g = example_graph();
    CHECK(g.vertex_count() == 7);
    CHECK(g.sink() == 7);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(5) == 3);
    CHECK(g.has_edge(5, 7));
    CHECK_FALSE(g.has_edge(1, 7));
}

TEST_CASE("toppling the example graph") {
    Graph g = example_graph();
    Configuration c = conf({0, 0, 2, 0, 2, 2});
    CHECK(topple(g, c, 5) == conf({0, 0, 2, 1, -1, 3}));
    CHECK_THROWS_AS(topple(g, c, 8), std::out_of_range);
    CHECK_THROWS_AS(topple(g, c, 0), std::out_of_range);
}

TEST_CASE("toppling the sink and undoing it") {
    Graph k11(2, {{1, 2}});
    CHECK(topple(k11, conf({0}), k11.sink()) == conf({1}));

    Graph g = example_graph();
    Configuration c = conf({1, 0, 2, -1, 0, 5});
    for (int v = 1; v <= g.vertex_count(); ++v) {
        CHECK(untopple(g, topple(g, c, v), v) == c);
    }
}

TEST_CASE("stability") {
    Graph g = example_graph();
    CHECK(is_stable(g, conf({0, 0, 2, 0, 2, 2})));
    CHECK_FALSE(is_stable(g, conf({0, 0, 2, 1, -1, 3})));
    CHECK(is_stable(g, conf({0, 0, 0, 0, 0, 0})));
    CHECK_FALSE(is_stable(g, conf({2, 0, 0, 0, 0, 0})));  // degree(1) == 2
}

TEST_CASE("toppling every vertex once is the identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> height(-2, 6);
    for (int vertices = 2; vertices <= 8; ++vertices) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::pair<int, int>> edges;
            for (int a = 1; a <= vertices; ++a) {
                for (int b = a + 1; b <= vertices; ++b) {
                    if (coin(rng)) edges.emplace_back(a, b);
                }
            }
            Graph g = [&]() -> Graph {
                try {
                    return Graph(vertices, edges);
                } catch (const std::invalid_argument&) {
                    return make_complete(vertices);
                }
            }();
            std::vector<int> heights(g.nonsink_count());
            for (int& h : heights) h = height(rng);
            Configuration c(heights), walked = c;
            for (int v = 1; v <= g.vertex_count(); ++v) walked = topple(g, walked, v);
            CHECK(walked == c);
        }
    }
}

TEST_CASE("recurrence by burning") {
    Graph g = example_graph();
    // psi moves (0,0,2,0,2,2), so it cannot be recurrent
    CHECK_FALSE(is_recurrent(g, conf({0, 0, 2, 0, 2, 2})));
    // burning stalls: after the sink fires only v5 and v6 can follow
    CHECK_FALSE(is_recurrent(g, conf({1, 1, 0, 0, 2, 2})));
    CHECK(is_recurrent(g, conf({1, 1, 2, 2, 2, 2})));
    CHECK_THROWS_AS(is_recurrent(g, conf({0, 0, 2, 1, -1, 3})), std::domain_error);

    Graph k22 = make_complete_bipartite(2, 2);
    CHECK(is_recurrent(k22, conf({1, 1, 1})));
}

TEST_CASE("greedy burning matches the permutation oracle") {
    for (const Graph& g : verify::small_graph_family(4)) {
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            CHECK(is_recurrent(g, c) == verify::is_recurrent_by_permutation_search(g, c));
        }
    }
}

TEST_CASE("parking by pruning") {
    Graph g = example_graph();
    CHECK(is_parking(g, conf({0, 0, 0, 0, 0, 0})));
    // subtracting delta_{5,6} keeps (1,1,0,0,2,2) non-negative
    CHECK_FALSE(is_parking(g, conf({1, 1, 0, 0, 2, 2})));
    CHECK_THROWS_AS(is_parking(g, conf({9, 0, 0, 0, 0, 0})), std::domain_error);

    Graph k11(2, {{1, 2}});
    CHECK(is_parking(k11, conf({0})));
}

TEST_CASE("pruning matches the subset-scan oracle") {
    for (const Graph& g : verify::small_graph_family(4)) {
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            CHECK(is_parking(g, c) == verify::is_parking_by_subset_scan(g, c));
        }
    }
}

TEST_CASE("distance profiles") {
    Graph g = example_graph();
    // sink distances: v5,v6 at 1; v4 at 2; v3 at 3; v1,v2 at 4
    CHECK(sink_distances(g) == std::vector<int>{4, 4, 3, 2, 1, 1});
    CHECK(distance_profile(g, conf({0, 0, 2, 0, 2, 2})) == DistanceProfile{4, 0, 2, 0});
    CHECK(distance_profile(g, conf({0, 0, 0, 0, 0, 0})) == DistanceProfile{0, 0, 0, 0});

    Graph k11(2, {{1, 2}});
    CHECK(distance_profile(k11, conf({0})) == DistanceProfile{0});
}

TEST_CASE("the distance-profile order") {
    Graph g = example_graph();
    Configuration c = conf({0, 0, 2, 0, 2, 2});
    Configuration d = conf({1, 1, 0, 0, 2, 2});
    // profiles (4,0,2,0) vs (4,0,0,2): the second is smaller
    CHECK(compare_lt2(g, d, c) == std::strong_ordering::less);
    CHECK(compare_lt2(g, c, d) == std::strong_ordering::greater);
    CHECK(compare_lt2(g, c, c) == std::strong_ordering::equal);
}

TEST_CASE("each toppling class holds one recurrent and one parking configuration") {
    for (const Graph& g : verify::small_graph_family(4)) {
        std::map<std::vector<long long>, std::pair<int, int>> per_class;
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            auto& counts = per_class[verify::class_residue(g, c)];
            counts.first += is_recurrent(g, c) ? 1 : 0;
            counts.second += is_parking(g, c) ? 1 : 0;
        }
        CHECK(static_cast<long long>(per_class.size()) == verify::toppling_class_count(g));
        for (const auto& [residue, counts] : per_class) {
            CHECK(counts.first == 1);
            CHECK(counts.second == 1);
        }
    }
}
