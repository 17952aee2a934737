#include <benchmark/benchmark.h>

#include "circletk/c1p.hpp"
#include "circletk/families.hpp"
#include "circletk/oracle.hpp"
#include "circletk/recognizer.hpp"
#include "circletk/two_nested.hpp"

#include <random>

using namespace circletk;

namespace {

Graph random_split(uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    int k = 1 + int(rng() % uint64_t(n - 1));
    Graph g(n);
    for (int a = 0; a < k; a++)
        for (int b = a + 1; b < k; b++) g.add_edge(a, b);
    for (int s = k; s < n; s++) {
        for (int a = 0; a < k; a++)
            if (rng() % 2) g.add_edge(s, a);
        if (g.degree(s) == 0) g.add_edge(s, int(rng() % uint64_t(k)));
    }
    return g;
}

} // namespace

static void BM_RecognizeRandomSplit(benchmark::State& state) {
    int n = int(state.range(0));
    std::vector<Graph> graphs;
    for (uint64_t s = 0; s < 16; s++) graphs.push_back(random_split(s, n));
    size_t i = 0;
    for (auto _ : state) {
        auto cert = recognize(graphs[i++ % graphs.size()]);
        benchmark::DoNotOptimize(cert.verdict.size());
    }
}
BENCHMARK(BM_RecognizeRandomSplit)->Arg(8)->Arg(9)->Arg(12);

static void BM_OracleWordSearch(benchmark::State& state) {
    Graph g = random_split(3, int(state.range(0)));
    for (auto _ : state) {
        auto res = brute_force_is_circle(g, 9);
        benchmark::DoNotOptimize(res.verdict);
    }
}
BENCHMARK(BM_OracleWordSearch)->Arg(7)->Arg(8)->Arg(9);

static void BM_C1P(benchmark::State& state) {
    std::mt19937_64 rng(42);
    int dim = int(state.range(0));
    Matrix01 m(dim, std::vector<uint8_t>(dim));
    for (auto& row : m)
        for (auto& x : row) x = rng() % 2;
    for (auto _ : state) {
        auto res = has_c1p(m);
        benchmark::DoNotOptimize(res.order.has_value());
    }
}
BENCHMARK(BM_C1P)->Arg(5)->Arg(7)->Arg(8);

static void BM_TwoNested(benchmark::State& state) {
    // the worked LR-orderable matrix
    EnrichedMatrix m = parse_enriched_matrix(
        "6 5\nLR - 10001\nLR - 11001\nU - 01100\nL red 11100\nLR red 00000\nR blue 00111\n");
    for (auto _ : state) {
        auto res = is_2nested(m);
        benchmark::DoNotOptimize(res.two_nested);
    }
}
BENCHMARK(BM_TwoNested);

static void BM_OrbitCheck(benchmark::State& state) {
    Graph g = k_sun_with_center(3);
    for (auto _ : state) {
        auto res = bouchet_orbit_check(g, 20000);
        benchmark::DoNotOptimize(res.verdict);
    }
}
BENCHMARK(BM_OrbitCheck);

BENCHMARK_MAIN();
