#include <benchmark/benchmark.h>

#include "dicke/dicke.hpp"

namespace {

using namespace dicke;

const ModelParams kPoint{1.0, 1.0, 1.0, 1.0, 0.5};

void BM_SolveGap(benchmark::State& state) {
    const Thermo t{5.0};
    for (auto _ : state) benchmark::DoNotOptimize(meanfield::solve_gap(kPoint, t));
}
BENCHMARK(BM_SolveGap);

void BM_RunGrid(benchmark::State& state) {
    sweep::GridSpec spec;
    spec.axis1 = {sweep::Parameter::g, 0.05, 1.5, static_cast<int>(state.range(0))};
    spec.axis2 = sweep::Axis{sweep::Parameter::beta, 0.1, 50.0, 25, sweep::AxisScale::Log};
    spec.fixed.omega0 = 1.0;
    spec.fixed.Omega = 1.0;
    spec.fixed.lambda = 0.3;
    for (auto _ : state) benchmark::DoNotOptimize(sweep::run_grid(spec, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.size()));
}
BENCHMARK(BM_RunGrid)->Arg(10)->Arg(100);

void BM_BuildCollective(benchmark::State& state) {
    const int atoms = static_cast<int>(state.range(0));
    const exact::TruncationConfig trunc{static_cast<int>(state.range(1))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::build_collective(kPoint, atoms, atoms, trunc));
    }
}
BENCHMARK(BM_BuildCollective)->Args({4, 32})->Args({8, 32})->Args({8, 84})->Unit(benchmark::kMillisecond);

void BM_FreeEnergyExact(benchmark::State& state) {
    const int atoms = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::free_energy_at_cutoff(kPoint, atoms, {5.0}, 40));
    }
}
BENCHMARK(BM_FreeEnergyExact)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FermionCheck(benchmark::State& state) {
    const int atoms = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact::fermionic_identity_check(kPoint, atoms, {2.0}, {10}));
    }
}
BENCHMARK(BM_FermionCheck)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
