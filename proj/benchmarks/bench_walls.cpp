#include <benchmark/benchmark.h>

#include "pellwall/report.hpp"
#include "pellwall/walls.hpp"

using namespace pellwall;

static void EnumerateWalls(benchmark::State& state) {
    for (auto _ : state) {
        auto walls = enumerate_walls(7, state.range(0));
        benchmark::DoNotOptimize(walls);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(EnumerateWalls)->DenseRange(2, 10, 2)->Complexity();

static void BruteforceWallScan(benchmark::State& state) {
    for (auto _ : state) {
        auto pairs = bruteforce_wall_scan(6, state.range(0));
        benchmark::DoNotOptimize(pairs);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BruteforceWallScan)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BuildReportJson(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        std::string text = report_to_json_string(build_report(d, 3));
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(BuildReportJson)->Arg(7)->Arg(46)->Arg(97);

BENCHMARK_MAIN();
