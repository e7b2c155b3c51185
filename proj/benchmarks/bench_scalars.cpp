#include <benchmark/benchmark.h>

#include "dpg/alg_num.hpp"
#include "dpg/scalar.hpp"

using namespace dpg;

static void BM_ScalarMultiply(benchmark::State& state) {
    Scalar a = Scalar(1) + Scalar::q_pow(Rational(3, 2)) * Scalar::i();
    Scalar b = Scalar(1) / (Scalar(1) - Scalar::q_pow(Rational(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMultiply)->Arg(2)->Arg(5)->Arg(10);

static void BM_ScalarSumOfFractions(benchmark::State& state) {
    for (auto _ : state) {
        Scalar s(0);
        for (long k = 1; k <= state.range(0); ++k) s += Scalar(1) / (Scalar(1) - Scalar::q_pow(Rational(k)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_ScalarSumOfFractions)->Arg(4)->Arg(8);

static void BM_EvalAtConcreteQ(benchmark::State& state) {
    Scalar s = Scalar::i() * Scalar::q_pow(Rational(-7, 4)) / (Scalar(1) + Scalar::q_pow(Rational(1, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(eval_at(s, state.range(0)));
}
BENCHMARK(BM_EvalAtConcreteQ)->Arg(2)->Arg(4)->Arg(3);
