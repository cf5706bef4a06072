#include <benchmark/benchmark.h>

#include "herbidyn/bifurcation_scan.hpp"
#include "herbidyn/coupled_system.hpp"
#include "herbidyn/equilibrium_analysis.hpp"
#include "herbidyn/growth_models.hpp"
#include "herbidyn/stochastic_bursting.hpp"

using namespace herbidyn;

static SystemSpec bh_spec() {
    return SystemSpec(Variant::ModelII, GrowthModel::beverton_holt_r(2.5), 2.0);
}

static void BM_Step(benchmark::State& state) {
    SystemSpec spec = bh_spec();
    State s{0.9, 0.3};
    for (auto _ : state) {
        s = step(spec, s);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Step);

static void BM_Simulate1k(benchmark::State& state) {
    SystemSpec spec = bh_spec();
    State s0{0.9, 0.3};
    for (auto _ : state) {
        Trajectory traj = simulate(spec, s0, 1000);
        benchmark::DoNotOptimize(traj.states.data());
    }
}
BENCHMARK(BM_Simulate1k);

static void BM_SimulateNoisy1k(benchmark::State& state) {
    SystemSpec spec = bh_spec();
    State s0{0.9, 0.3};
    NoiseSpec noise{0.01, 42, NoiseUpdate::Additive};
    for (auto _ : state) {
        Trajectory traj = simulate_noisy(spec, noise, s0, 1000);
        benchmark::DoNotOptimize(traj.states.data());
    }
}
BENCHMARK(BM_SimulateNoisy1k);

static void BM_InteriorSolve(benchmark::State& state) {
    SystemSpec spec = bh_spec();
    for (auto _ : state) {
        auto eq = interior_equilibrium(spec);
        benchmark::DoNotOptimize(eq);
    }
}
BENCHMARK(BM_InteriorSolve);

static void BM_AttractorClassify(benchmark::State& state) {
    SystemSpec spec = bh_spec();
    ScanSettings settings;
    settings.T_transient = 2000;
    settings.T_sample = 1024;
    const State s0 = default_scan_start(spec.model());
    for (auto _ : state) {
        AttractorClass cls = attractor_classify(spec, s0, settings);
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(BM_AttractorClassify);

BENCHMARK_MAIN();
