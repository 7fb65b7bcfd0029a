#include <benchmark/benchmark.h>

#include "pellwall/pell.hpp"

using namespace pellwall;

static void PellMinimalContinuedFraction(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        auto s = pell_minimal(d, /*certify_bound=*/0);
        benchmark::DoNotOptimize(s);
    }
}
// d = 9949 has a fundamental solution with ~212 decimal digits
BENCHMARK(PellMinimalContinuedFraction)->Arg(7)->Arg(46)->Arg(1621)->Arg(9949);

static void PellMinimalCertified(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        auto s = pell_minimal(d);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(PellMinimalCertified)->Arg(46)->Arg(421);

static void PellBruteforceScan(benchmark::State& state) {
    const long d = 2;
    const Integer bound = state.range(0);
    for (auto _ : state) {
        auto sols = pell_bruteforce_oracle(d, bound);
        benchmark::DoNotOptimize(sols);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PellBruteforceScan)->RangeMultiplier(8)->Range(1 << 10, 1 << 19)->Complexity();

static void PellSolutionsIterate(benchmark::State& state) {
    for (auto _ : state) {
        auto sols = pell_solutions(7, state.range(0));
        benchmark::DoNotOptimize(sols);
    }
}
BENCHMARK(PellSolutionsIterate)->Arg(5)->Arg(20);

BENCHMARK_MAIN();
