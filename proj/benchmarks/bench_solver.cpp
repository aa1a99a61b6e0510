// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include "mabeam/awv_sca.hpp"
#include "mabeam/baselines.hpp"
#include "mabeam/spectral_init.hpp"

namespace {

mabeam::Scenario scenario_for(int n_antennas, int n_interference) {
    mabeam::Scenario sc;
    sc.n_antennas = n_antennas;
    sc.aperture = std::max(8.0, 0.5 * (n_antennas + 1));
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.rng_seed = 1;
    mabeam::draw_random_directions(2, n_interference, 1, sc.signal_dirs,
                                   sc.interference_dirs);
    return sc;
}

void BM_Initialize(benchmark::State& state) {
    const auto sc = scenario_for(int(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(mabeam::initialize(sc, mabeam::convex::SolverSettings{}));
}

void BM_WeightPass(benchmark::State& state) {
    const auto sc = scenario_for(int(state.range(0)), 2);
    const mabeam::convex::SolverSettings settings;
    const auto [apv, awv] = mabeam::initialize(sc, settings);
    for (auto _ : state)
        benchmark::DoNotOptimize(mabeam::optimize_awv(apv, awv, sc, settings));
}

void BM_FullSolve(benchmark::State& state) {
    const auto sc = scenario_for(int(state.range(0)), int(state.range(1)));
    const mabeam::convex::SolverSettings settings;
    for (auto _ : state) {
        const auto report = mabeam::alternating_optimize(sc, std::nullopt, settings);
        benchmark::DoNotOptimize(report.solution.delta);
        state.counters["outer"] = report.outer_iterations;
    }
}

void BM_FixedPositionBaseline(benchmark::State& state) {
    const auto sc = scenario_for(int(state.range(0)), 2);
    const mabeam::convex::SolverSettings settings;
    for (auto _ : state)
        benchmark::DoNotOptimize(mabeam::fpa_baseline(sc, settings));
}

}  // namespace

BENCHMARK(BM_Initialize)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightPass)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullSolve)
    ->Args({4, 1})
    ->Args({4, 2})
    ->Args({8, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedPositionBaseline)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
