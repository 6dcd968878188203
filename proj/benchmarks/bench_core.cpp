#include <benchmark/benchmark.h>

#include <random>

#include "sandpile/bipartite.hpp"
#include "sandpile/enumeration.hpp"
#include "sandpile/graph.hpp"
#include "sandpile/operators.hpp"
#include "sandpile/paths.hpp"

using namespace sandpile;

namespace {

SortedBipartiteConfig random_stable(int m, int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> nonsink(n), sinkpart(m - 1);
    std::uniform_int_distribution<int> front(0, m - 1), back(0, n - 1);
    for (int& h : nonsink) h = front(rng);
    for (int& h : sinkpart) h = back(rng);
    std::sort(nonsink.begin(), nonsink.end());
    std::sort(sinkpart.begin(), sinkpart.end());
    return make_sorted_bipartite(m, n, std::move(nonsink), std::move(sinkpart));
}

}  // namespace

static void BM_PhiBipartite(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = m + m / 2;
    SortedBipartiteConfig c = random_stable(m, n, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_kmn(c));
    }
}
BENCHMARK(BM_PhiBipartite)->Arg(8)->Arg(64)->Arg(512);

static void BM_WalkClass(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    SortedBipartiteConfig c = random_stable(m, m + 3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(walk_class(c));
    }
}
BENCHMARK(BM_WalkClass)->Arg(8)->Arg(32)->Arg(128);

static void BM_GeneralPsi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_complete_bipartite(3, n - 2);
    Configuration c(std::vector<int>(g.nonsink_count(), 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi(g, c));
    }
}
BENCHMARK(BM_GeneralPsi)->Arg(8)->Arg(12)->Arg(16);

static void BM_MeasureFrame(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    SortedBipartiteConfig c = random_stable(m, m, 3);
    FramedPair p = config_to_framed_pair(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_frame(p));
    }
}
BENCHMARK(BM_MeasureFrame)->Arg(16)->Arg(256)->Arg(4096);

static void BM_StableIntersections(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    FramedPair p = config_to_framed_pair(random_stable(m, m + 1, 11));
    for (auto _ : state) {
        benchmark::DoNotOptimize(stable_intersections(p));
    }
}
BENCHMARK(BM_StableIntersections)->Arg(16)->Arg(256)->Arg(4096);

static void BM_EnumeratePolyominoes(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_polyominoes(m, m));
    }
}
BENCHMARK(BM_EnumeratePolyominoes)->Arg(3)->Arg(4)->Arg(5);

static void BM_CyclicVerify(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_cyclic_lemma(m, m));
    }
}
BENCHMARK(BM_CyclicVerify)->Arg(3)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
