#include "sandpile/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "sandpile/bipartite.hpp"
#include "sandpile/complete_graph.hpp"
#include "sandpile/enumeration.hpp"
#include "sandpile/graph.hpp"
#include "sandpile/json_io.hpp"
#include "sandpile/operators.hpp"
#include "sandpile/paths.hpp"
#include "sandpile/verify.hpp"

namespace sandpile::selftest {

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (ok && !cond) {
            ok = false;
            detail = what;
        }
    }
};

Graph example_graph() {
    return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}});
}

Configuration conf(std::vector<int> h) { return Configuration(std::move(h)); }

SortedBipartiteConfig bip(int m, int n, std::vector<int> nonsink, std::vector<int> sinkpart) {
    return make_sorted_bipartite(m, n, std::move(nonsink), std::move(sinkpart));
}

// All sorted stable configurations on K_{m,n}: both parts weakly increasing
// within their stable height ranges.
std::vector<SortedBipartiteConfig> all_sorted_stable(int m, int n) {
    std::vector<std::vector<int>> fronts, backs;
    std::function<void(std::vector<int>&, int, int, int, std::vector<std::vector<int>>&)> gen =
        [&](std::vector<int>& cur, int len, int next_min, int max, std::vector<std::vector<int>>& out) {
            if (static_cast<int>(cur.size()) == len) {
                out.push_back(cur);
                return;
            }
            for (int h = next_min; h <= max; ++h) {
                cur.push_back(h);
                gen(cur, len, h, max, out);
                cur.pop_back();
            }
        };
    std::vector<int> scratch;
    gen(scratch, n, 0, m - 1, fronts);
    scratch.clear();
    gen(scratch, m - 1, 0, n - 1, backs);
    std::vector<SortedBipartiteConfig> all;
    for (const auto& a : fronts)
        for (const auto& b : backs) all.push_back(bip(m, n, a, b));
    return all;
}

long long sum_all(const SortedBipartiteConfig& c) {
    long long s = 0;
    for (int h : c.nonsink) s += h;
    for (int h : c.sinkpart) s += h;
    return s;
}

long long sum_nonsink(const SortedBipartiteConfig& c) {
    long long s = 0;
    for (int h : c.nonsink) s += h;
    return s;
}

void criterion_psi_example(Checker& ck) {
    Graph g = example_graph();
    Configuration expected = conf({1, 1, 0, 0, 2, 2});
    ck.expect(psi(g, conf({0, 0, 2, 0, 2, 2})) == expected,
              "psi((0,0,2,0,2,2,*)) != (1,1,0,0,2,2,*)");
    ck.expect(psi(g, conf({1, 1, 0, 2, 0, 0})) == expected,
              "psi((1,1,0,2,0,0,*)) != (1,1,0,0,2,2,*)");
}

void criterion_frame_measurement(Checker& ck) {
    FramedPair p(make_word("ENNENENN"), make_word("NNNEENENN"), {2, 7});
    SortedBipartiteConfig expected = bip(4, 6, {2, 2, 4, 5, 5, 6}, {-4, -1, 1});
    ck.expect(measure_frame(p) == expected, "measurement at (2,7) is wrong");
}

void criterion_class_walk(Checker& ck) {
    SortedBipartiteConfig u = bip(4, 6, {1, 2, 2, 3, 3, 3}, {0, 3, 5});
    SortedBipartiteConfig f1 = bip(4, 6, {0, 0, 1, 1, 1, 3}, {2, 4, 5});
    SortedBipartiteConfig f2 = bip(4, 6, {0, 1, 1, 2, 2, 2}, {0, 3, 5});
    SortedBipartiteConfig f3 = bip(4, 6, {0, 0, 0, 2, 3, 3}, {0, 2, 3});
    ck.expect(phi_kmn(u) == f1, "phi(u) wrong");
    ck.expect(phi_kmn(f1) == f2, "phi^2(u) wrong");
    ck.expect(phi_kmn(f2) == f3, "phi^3(u) wrong");
    ck.expect(phi_kmn(f3) == f3, "phi^3(u) is not a fixed point");
    ck.expect(grade_kmn(u) == 3 && grade_kmn(f1) == 2 && grade_kmn(f2) == 1 && grade_kmn(f3) == 0,
              "grades along the walk are not 3,2,1,0");
}

void criterion_stable_intersections(Checker& ck) {
    FramedPair p(make_word("ENNENENN"), make_word("NNNEENENN"));
    std::vector<GridPoint> zs = stable_intersections(p);
    std::vector<GridPoint> expected{{5, 9}, {3, 4}, {2, 3}, {0, 0}};
    ck.expect(zs == expected, "normalized stable intersections differ");
    ck.expect(pos(p, 8) == 2, "pos(E_8) != 2");
}

void criterion_cyclic_lemma(Checker& ck) {
    for (int m = 2; m <= 7; ++m) {
        for (int n = 2; m + n <= 9; ++n) {
            CyclicLemmaReport r = verify_cyclic_lemma(m, n);
            ck.expect(r.ok, "cyclic lemma fails at m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
        }
    }
}

void criterion_enumeration_formulas(Checker& ck) {
    for (int m = 1; m <= 9; ++m) {
        for (int n = 1; m + n <= 10; ++n) {
            BigInt formula = count_polyominoes_formula(m, n);
            BigInt brute = enumerate_polyominoes(m, n).size();
            ck.expect(formula == brute, "polyomino count mismatch at m=" + std::to_string(m) +
                                            " n=" + std::to_string(n));
        }
    }
    ck.expect(count_polyominoes_formula(2, 2) == 3, "|Polyo_{2,2}| != 3");
    ck.expect(count_pattern_formula(1, 1, 3, PatternKind::Simple) == 2, "simple(1,1,3) != 2");
    ck.expect(count_pattern_formula(1, 2, 1, PatternKind::Double) == 3, "double(1,2,1) != 3");

    auto repeat = [](const std::string& block, int times) {
        std::string s;
        for (int i = 0; i < times; ++i) s += block;
        return s;
    };
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int c = 1; c <= 3 && c * (a + b) <= 10; ++c) {
                BinomialWord p = make_word(
                    repeat(std::string(a, 'E') + std::string(b, 'N'), c));
                BigInt formula = count_pattern_formula(a, b, c, PatternKind::Simple);
                BigInt brute = enumerate_pattern(p).size();
                ck.expect(formula == brute, "simple pattern mismatch at a=" + std::to_string(a) +
                                                " b=" + std::to_string(b) +
                                                " c=" + std::to_string(c));
            }
        }
    }
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            if (a == b) continue;
            for (int c = 1; 2 * c * (a + b) <= 12; ++c) {
                BinomialWord p = make_word(repeat(std::string(a, 'E') + std::string(a, 'N') +
                                                      std::string(b, 'E') + std::string(b, 'N'),
                                                  c));
                BigInt formula = count_pattern_formula(a, b, c, PatternKind::Double);
                BigInt brute = enumerate_pattern(p).size();
                ck.expect(formula == brute, "double pattern mismatch at a=" + std::to_string(a) +
                                                " b=" + std::to_string(b) +
                                                " c=" + std::to_string(c));
            }
        }
    }
}

void criterion_operator_theorems(Checker& ck) {
    std::vector<Graph> family = verify::small_graph_family(5);
    ck.expect(family.size() >= 20, "graph family is smaller than 20");
    for (size_t gi = 0; gi < family.size(); ++gi) {
        const Graph& g = family[gi];
        const std::string tag = " (graph " + std::to_string(gi) + ")";
        std::map<std::vector<long long>, std::pair<int, int>> per_class;
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            Configuration pc = psi(g, c);
            Configuration fc = phi(g, c);
            bool rec = is_recurrent(g, c);
            bool park = is_parking(g, c);
            ck.expect((pc == c) == rec, "psi-fixed <-> recurrent fails" + tag);
            ck.expect(rec == verify::is_recurrent_by_permutation_search(g, c),
                      "burning disagrees with the permutation oracle" + tag);
            ck.expect((fc == c) == park, "phi-fixed <-> parking fails" + tag);
            ck.expect(park == verify::is_parking_by_subset_scan(g, c),
                      "pruning disagrees with the subset oracle" + tag);
            ck.expect(phi(g, beta(g, c)) == beta(g, pc), "phi.beta != beta.psi" + tag);
            auto& counts = per_class[verify::class_residue(g, c)];
            if (rec) counts.first += 1;
            if (park) counts.second += 1;
        }
        for (const auto& [residue, counts] : per_class) {
            ck.expect(counts.first == 1, "a toppling class without exactly one recurrent" + tag);
            ck.expect(counts.second == 1, "a toppling class without exactly one parking" + tag);
        }
        ck.expect(static_cast<long long>(per_class.size()) == verify::toppling_class_count(g),
                  "stable classes do not cover every toppling class" + tag);
    }
}

void criterion_bipartite_equivalences(Checker& ck) {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            Graph g = make_complete_bipartite(m, n);
            const std::string tag = " (K_{" + std::to_string(m) + "," + std::to_string(n) + "})";
            for (const SortedBipartiteConfig& c : all_sorted_stable(m, n)) {
                SortedBipartiteConfig pc = phi_kmn(c);
                SortedBipartiteConfig qc = psi_kmn(c);
                // translation loop vs the general subset scan
                ck.expect(pc == sorted_from_general(m, n, phi(g, to_general(c))),
                          "phi_kmn disagrees with general phi" + tag);
                ck.expect(qc == sorted_from_general(m, n, psi(g, to_general(c))),
                          "psi_kmn disagrees with general psi" + tag);
                // vs the frame jumps
                FramedPair p = config_to_framed_pair(c);
                ck.expect(measure_frame(jump(p, JumpDirection::Next)) == pc,
                          "frame jump next disagrees with phi_kmn" + tag);
                ck.expect(measure_frame(jump(p, JumpDirection::Prev)) == qc,
                          "frame jump prev disagrees with psi_kmn" + tag);
                // semigroup inverses off the fixed points
                if (!(qc == c)) {
                    ck.expect(phi_kmn(qc) == c, "phi(psi(c)) != c off recurrent" + tag);
                }
                if (!(pc == c)) {
                    ck.expect(psi_kmn(pc) == c, "psi(phi(c)) != c off parking" + tag);
                }
                // graduated description
                int grade = grade_kmn(c);
                std::vector<SortedBipartiteConfig> walk = walk_class(c);
                ck.expect(static_cast<int>(walk.size()) == m, "class walk length != m" + tag);
                ck.expect(walk[m - 1 - grade] == c, "c not at index m-1-grade of its walk" + tag);
                SortedBipartiteConfig from_parking = walk.back();
                for (int i = 0; i < grade; ++i) from_parking = psi_kmn(from_parking);
                ck.expect(from_parking == c, "psi^grade(parking) != c" + tag);
                SortedBipartiteConfig from_recurrent = walk.front();
                for (int i = 0; i < m - 1 - grade; ++i) from_recurrent = phi_kmn(from_recurrent);
                ck.expect(from_recurrent == c, "phi^(m-1-grade)(recurrent) != c" + tag);
                // pictorial parking characterization at the anchored frame
                bool pos_parking = true;
                for (int i = 1; i <= m - 1; ++i) {
                    if (pos(p, i) > 0) pos_parking = false;
                }
                ck.expect(pos_parking == (pc == c), "parking <-> pos <= 0 fails" + tag);
            }
        }
    }
}

void criterion_kn_reduction(Checker& ck) {
    CompleteConfig v = make_complete_config(5, {0, 2, 2, 3});
    KnOperatorResult r = phi_kn_trace(v);
    ck.expect(r.applications == 2, "k != 2 on the K_5 example");
    ck.expect(r.result == make_complete_config(5, {0, 0, 1, 3}), "phi on K_5 example wrong");
    ck.expect(r.iterates.size() == 3, "expected the embedding plus two iterates");
    if (r.iterates.size() == 3) {
        // sorted forms of (1,2,3,4,0; 2,4,4,0) and (3,4,0,1,2; 4,1,1,2)
        ck.expect(r.iterates[1] == bip(5, 5, {0, 1, 2, 3, 4}, {0, 2, 4, 4}),
                  "first iterate differs");
        ck.expect(r.iterates[1].sinkpart.front() == 0, "first iterate should not be 0-free");
        ck.expect(r.iterates[2] == bip(5, 5, {0, 1, 2, 3, 4}, {1, 1, 2, 4}),
                  "second iterate differs");
    }

    for (int n = 2; n <= 5; ++n) {
        Graph g = make_complete(n);
        const std::string tag = " (K_" + std::to_string(n) + ")";
        for (const Configuration& c : verify::all_stable_configurations(g)) {
            CompleteConfig w = make_complete_config(n, c.heights);
            Configuration general_phi = phi(g, c);
            Configuration general_psi = psi(g, c);
            auto sorted_conf = [](Configuration x) {
                std::sort(x.heights.begin(), x.heights.end());
                return x;
            };
            ck.expect(phi_kn(w).heights == sorted_conf(general_phi).heights,
                      "phi_kn disagrees with general phi" + tag);
            ck.expect(psi_kn(w).heights == sorted_conf(general_psi).heights,
                      "psi_kn disagrees with general psi" + tag);
        }
    }
}

void criterion_translation_laws(Checker& ck) {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const std::string tag = " (m=" + std::to_string(m) + " n=" + std::to_string(n) + ")";
            for (const BinomialWord& u : binomial_words(m - 1, n - 1)) {
                for (const BinomialWord& l : binomial_words(m - 1, n)) {
                    FramedPair base(u, l);
                    for (long long x = -m; x <= 2 * m; ++x) {
                        for (long long y = -n; y <= 2 * n; ++y) {
                            SortedBipartiteConfig here = measure_frame(base.with_anchor({x, y}));
                            SortedBipartiteConfig south = measure_frame(base.with_anchor({x, y - 1}));
                            SortedBipartiteConfig west = measure_frame(base.with_anchor({x - 1, y}));
                            ck.expect(t_nonsink(here) == south, "t_nonsink != move south" + tag);
                            ck.expect(t_sink(here) == west, "t_sink != move west" + tag);
                            // the non-sink toppling drops one grain overall
                            // and m grains on the non-sink side; the sink
                            // toppling is neutral overall and feeds the
                            // non-sink side n grains
                            ck.expect(sum_all(south) == sum_all(here) - 1 &&
                                          sum_nonsink(south) == sum_nonsink(here) - m,
                                      "height laws fail for t_nonsink" + tag);
                            ck.expect(sum_all(west) == sum_all(here) &&
                                          sum_nonsink(west) == sum_nonsink(here) + n,
                                      "height laws fail for t_sink" + tag);
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<CriterionResult> run_all() {
    struct Entry {
        int id;
        const char* name;
        double budget;
        std::function<void(Checker&)> run;
    };
    const std::vector<Entry> entries{
        {1, "psi on the 7-vertex example graph", 1.0, criterion_psi_example},
        {2, "frame measurement", 1.0, criterion_frame_measurement},
        {3, "class walk on K_{4,6}", 1.0, criterion_class_walk},
        {4, "stable intersections and pos", 1.0, criterion_stable_intersections},
        {5, "cyclic partition, exhaustive m+n <= 9", 60.0, criterion_cyclic_lemma},
        {6, "enumeration formulas vs brute force", 120.0, criterion_enumeration_formulas},
        {7, "operator theorems on small graphs", 120.0, criterion_operator_theorems},
        {8, "bipartite equivalences m,n <= 4", 120.0, criterion_bipartite_equivalences},
        {9, "K_n reduction", 60.0, criterion_kn_reduction},
        {10, "frame translation laws", 30.0, criterion_translation_laws},
    };

    std::vector<CriterionResult> results;
    for (const Entry& e : entries) {
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        r.budget_seconds = e.budget;
        Checker ck;
        auto start = std::chrono::steady_clock::now();
        try {
            e.run(ck);
        } catch (const std::exception& ex) {
            ck.expect(false, std::string("exception: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ck.ok && r.seconds >= e.budget) {
            ck.expect(false, "time budget exceeded");
        }
        r.passed = ck.ok;
        r.detail = ck.detail;
        results.push_back(std::move(r));
    }
    return results;
}

bool run_all(std::ostream& out) {
    bool all_ok = true;
    for (const CriterionResult& r : run_all()) {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << "  ("
             << r.seconds << "s of " << r.budget_seconds << "s)";
        if (!r.passed) line << "  -- " << r.detail;
        out << line.str() << "\n";
        all_ok &= r.passed;
    }
    return all_ok;
}

}  // namespace sandpile::selftest
