#include "necone/thresholds.hpp"
#include "necone/zariski.hpp"

#include <benchmark/benchmark.h>

using namespace necone;

namespace {

ModelPtr p2(int r)
{
    SurfaceData d;
    d.chi = 1;
    d.kY_sq = 9;
    d.gram_Y = RationalMatrix(1, 1);
    d.gram_Y(0, 0) = 1;
    d.k_Y = {Rational(-3)};
    d.a_Y = {Rational(1)};
    d.surface_class = SurfaceClass::P2;
    return BlowupModel::create(SurfaceModel::create(std::move(d)), r);
}

CurveList curves(const ModelPtr& m)
{
    CurveList cl = exceptional_curves(m);
    for (auto& c : p2_line_curves(m)) cl.push_back(c);
    return cl;
}

void main_theorem(benchmark::State& state, Execution exec)
{
    const ModelPtr m = p2(12);
    const CurveList cl = curves(m);
    const auto samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        MainTheoremReport rep = main_theorem_check(m, cl, 1, 0, samples, 0, exec);
        benchmark::DoNotOptimize(rep.tested);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void list_check(benchmark::State& state, Execution exec)
{
    const ModelPtr m = p2(8);
    const CurveList cl = curves(m);
    const auto samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        ListCheckReport rep = list_decomposition_check(m, cl, samples, 0, exec);
        benchmark::DoNotOptimize(rep.reconstruction_failures);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(main_theorem, serial, Execution::Serial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(main_theorem, parallel, Execution::Parallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(list_check, serial, Execution::Serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(list_check, parallel, Execution::Parallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
