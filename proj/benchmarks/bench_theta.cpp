#include <benchmark/benchmark.h>

#include "pellwall/theta.hpp"

using namespace pellwall;

static void OperatorComposition(benchmark::State& state) {
    ThetaGenerators g = generators(7, PellSolution(127, 24, 7));
    MonomialOperator word = g.a1 * g.a3 * g.inv * g.a2;
    for (auto _ : state) {
        MonomialOperator composite = word * word * g.a4;
        benchmark::DoNotOptimize(composite);
    }
}
BENCHMARK(OperatorComposition);

static void OperatorPower(benchmark::State& state) {
    ThetaGenerators g = generators(7, PellSolution(127, 24, 7));
    Integer exponent(state.range(0));
    for (auto _ : state) {
        MonomialOperator p = (g.a1 * g.a3).pow(exponent);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(OperatorPower)->Arg(127)->Arg(1 << 20);

static void InvolutionSplitEnumerated(benchmark::State& state) {
    // d = 13 has 4 d y0^2 = 421200 basis vectors in E_{(0,0)}
    PellSolution s = *pell_minimal(13, 0);
    for (auto _ : state) {
        InvolutionSplit split = involution_split(13, s);
        benchmark::DoNotOptimize(split);
    }
}
BENCHMARK(InvolutionSplitEnumerated);

static void CertificateClosedForm(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        Prop41Certificate cert = prop41_certificate(d);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(CertificateClosedForm)->Arg(7)->Arg(29)->Arg(46);

BENCHMARK_MAIN();
