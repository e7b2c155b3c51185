#include <benchmark/benchmark.h>

#include "dpg/nildaha.hpp"
#include "dpg/nonsym.hpp"
#include "dpg/pipeline.hpp"
#include "dpg/w_module.hpp"

using namespace dpg;

static void BM_FormalModule(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_w_module_formal(Rational(1), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FormalModule)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_NilDahaRep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_rep(Rational(1, 2), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NilDahaRep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_NonsymFamily(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_family(Rational(3, 2), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NonsymFamily)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_PipelineConcrete(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(Instance{{Family::D, 3}, 2}));
}
BENCHMARK(BM_PipelineConcrete)->Unit(benchmark::kMillisecond);

static void BM_PipelineFormal(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(Instance{{Family::C, 3}, 0}));
}
BENCHMARK(BM_PipelineFormal)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
