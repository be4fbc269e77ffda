#include <benchmark/benchmark.h>

#include "innerfn/criteria.hpp"
#include "innerfn/inner.hpp"
#include "innerfn/levelset.hpp"
#include "innerfn/norms.hpp"

using namespace innerfn;

namespace {

InnerFunctionSpec geometric_spec(int count) {
    return InnerFunctionSpec({ZeroFamily::geometric(2.0, count)}, {});
}

InnerFunctionSpec mixed_spec() {
    return InnerFunctionSpec({ZeroFamily::geometric(2.0, 50)},
                             {AtomFamily::dyadic_square(30, 1.0)});
}

void bm_jet_blaschke(benchmark::State& state) {
    InnerFunctionSpec spec = geometric_spec(static_cast<int>(state.range(0)));
    Complex z{0.3, 0.4};
    for (auto _ : state) benchmark::DoNotOptimize(eval_inner(spec, z));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_jet_mixed(benchmark::State& state) {
    InnerFunctionSpec spec = mixed_spec();
    Complex z{0.3, 0.4};
    for (auto _ : state) benchmark::DoNotOptimize(eval_inner(spec, z));
}

void bm_boundary_modulus(benchmark::State& state) {
    InnerFunctionSpec spec = mixed_spec();
    Complex zeta = std::polar(1.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(boundary_derivative_modulus(spec, zeta));
}

void bm_grid_sample(benchmark::State& state) {
    InnerFunctionSpec spec = geometric_spec(20);
    int res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_grid(spec, 0.5, res));
    state.SetItemsProcessed(state.iterations() * res * res);
}

void bm_label_components(benchmark::State& state) {
    LevelSetGrid grid = sample_grid(geometric_spec(20), 0.9, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        LevelSetGrid copy = grid;
        label_components(copy);
        benchmark::DoNotOptimize(copy.component_count);
    }
}

void bm_hardy_mean(benchmark::State& state) {
    InnerFunctionSpec spec = mixed_spec();
    double r = 1.0 - std::exp2(-static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hardy_mean(spec, 1, 0.5, r));
}

void bm_tail_ratio(benchmark::State& state) {
    ZeroFamily f = ZeroFamily::geometric(2.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tail_ratio(f.zeros()));
}

} // namespace

BENCHMARK(bm_jet_blaschke)->Arg(20)->Arg(200)->Arg(2000);
BENCHMARK(bm_jet_mixed);
BENCHMARK(bm_boundary_modulus);
BENCHMARK(bm_grid_sample)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_label_components)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_hardy_mean)->Arg(4)->Arg(10);
BENCHMARK(bm_tail_ratio)->Arg(200)->Arg(20000);

BENCHMARK_MAIN();
