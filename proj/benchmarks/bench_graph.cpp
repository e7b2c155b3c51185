#include <benchmark/benchmark.h>

#include "dpg/drg.hpp"
#include "dpg/polar_space.hpp"
#include "dpg/w_module.hpp"

using namespace dpg;

static void BM_Enumerate(benchmark::State& state, Family f, long q, int D) {
    for (auto _ : state) benchmark::DoNotOptimize(dual_polar_graph(build_space(f, q, D)));
}
BENCHMARK_CAPTURE(BM_Enumerate, C_2_3, Family::C, 2, 3);
BENCHMARK_CAPTURE(BM_Enumerate, D_2_4, Family::D, 2, 4);
BENCHMARK_CAPTURE(BM_Enumerate, C_3_3, Family::C, 3, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, TwoAOdd_4_3, Family::TwoAOdd, 4, 3)->Unit(benchmark::kMillisecond);

static void BM_Profile(benchmark::State& state) {
    auto g = dual_polar_graph(build_space(Family::TwoD, 2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(profile_from_graph(g));
}
BENCHMARK(BM_Profile)->Unit(benchmark::kMillisecond);

static void BM_ConcreteModule(benchmark::State& state) {
    auto g = dual_polar_graph(build_space(Family::C, 3, 3));
    auto dist = all_distances(g);
    auto base = default_base_pair(g);
    auto prof = profile_from_graph(g, dist, base);
    for (auto _ : state) {
        auto part = clique_partition(g, dist, base, prof);
        benchmark::DoNotOptimize(build_w_module_concrete(g, part, prof));
    }
}
BENCHMARK(BM_ConcreteModule)->Unit(benchmark::kMillisecond);
