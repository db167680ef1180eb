#include <benchmark/benchmark.h>

#include "halfstep/analysis.hpp"
#include "halfstep/corpus.hpp"
#include "halfstep/expr.hpp"
#include "halfstep/sequences.hpp"

using namespace halfstep;

namespace {

StopConfig cubic_interval() {
    StopConfig c;
    c.interval = {-2, 0};
    return c;
}

void BM_MinusScaled(benchmark::State& st) {
    const auto spec = lookup(BuiltinId::cubic_paper).with_scale(static_cast<double>(st.range(0)));
    const auto cfg = cubic_interval();
    for (auto _ : st) benchmark::DoNotOptimize(iterate(StepRule::minus, spec, 0.0, cfg).last());
}
BENCHMARK(BM_MinusScaled)->Arg(4)->Arg(5)->Arg(13);

void BM_NewtonFromLeft(benchmark::State& st) {
    const auto spec = lookup(BuiltinId::cubic_paper);
    auto cfg = cubic_interval();
    for (auto _ : st) benchmark::DoNotOptimize(iterate(StepRule::newton, spec, -2.0, cfg).last());
}
BENCHMARK(BM_NewtonFromLeft);

void BM_Bisect(benchmark::State& st) {
    const auto spec = lookup(BuiltinId::cubic_paper);
    for (auto _ : st) benchmark::DoNotOptimize(bisect(spec, -2.0, 0.0, 1e-12));
}
BENCHMARK(BM_Bisect);

void BM_Recommend(benchmark::State& st) {
    const auto spec = lookup(BuiltinId::cubic_paper);
    for (auto _ : st) benchmark::DoNotOptimize(recommend(spec, -2.0, 0.0, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_Recommend)->Arg(256)->Arg(1024);

void BM_Parse(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(parse("sin(x)^2 + cbrt(x - 1/3) * exp(-x) - ln(abs(x) + 2)"));
}
BENCHMARK(BM_Parse);

void BM_EvalDual(benchmark::State& st) {
    const auto e = parse("x^3 - 2*x + 2");
    double x = -1.3;
    for (auto _ : st) benchmark::DoNotOptimize(eval_dual(e, x));
}
BENCHMARK(BM_EvalDual);

}  // namespace
BENCHMARK_MAIN();
