// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mabeam/alt_driver.hpp"
#include "mabeam/baselines.hpp"

using namespace mabeam;

namespace {

Scenario random_scenario(std::uint64_t seed, int n = 4, int k = 2, int l = 1) {
    Scenario sc;
    sc.n_antennas = n;
    sc.aperture = 6.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.rng_seed = seed;
    draw_random_directions(k, l, seed, sc.signal_dirs, sc.interference_dirs);
    return sc;
}

}  // namespace

TEST_CASE("single beam without interference converges to the full array gain") {
    Scenario sc;
    sc.n_antennas = 5;
    sc.aperture = 5.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(70.0)};

    const auto report = alternating_optimize(sc, std::nullopt, convex::SolverSettings{});
    REQUIRE(report.status == convex::SolveStatus::Optimal);
    CHECK(report.solution.delta > sc.n_antennas - 1e-2);
    CHECK(validate_solution(report.solution, sc).feasible());
}

TEST_CASE("outer and stage traces are non-decreasing on random scenarios") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Scenario sc = random_scenario(seed);
        const auto report =
            alternating_optimize(sc, std::nullopt, convex::SolverSettings{});
        REQUIRE(report.status == convex::SolveStatus::Optimal);

        const auto& trace = report.solution.outer_trace;
        REQUIRE_FALSE(trace.empty());
        for (size_t i = 1; i < trace.size(); ++i)
            CHECK(trace[i] >= trace[i - 1] - 1e-8);
        for (size_t i = 0; i < report.apv_stage_delta.size(); ++i) {
            // the position pass starts from the weight-pass result
            CHECK(report.apv_stage_delta[i] >= report.awv_stage_delta[i] - 1e-8);
        }
        CHECK(report.outer_iterations <= sc.max_outer);
        CHECK(report.solution.delta ==
              doctest::Approx(trace.back()).epsilon(1e-12));
        CHECK(report.solution.delta <= sc.n_antennas + 1e-9);
        CHECK(validate_solution(report.solution, sc).feasible());
    }
}

TEST_CASE("a single-outer-iteration override stops after one pass of each block") {
    const Scenario sc = random_scenario(77);
    const auto report =
        alternating_optimize(sc, std::nullopt, convex::SolverSettings{}, 1);
    REQUIRE(report.status == convex::SolveStatus::Optimal);
    CHECK(report.outer_iterations == 1);
    CHECK(report.awv_inner_counts.size() == 1);
    CHECK(report.apv_inner_counts.size() == 1);
}

TEST_CASE("supplied starting points are respected") {
    const Scenario sc = random_scenario(5);
    Apv apv{VecXd::LinSpaced(sc.n_antennas, 0.5, sc.aperture - 0.5)};
    // small enough that every gain is below the interference cap
    Awv awv{VecXcd::Constant(sc.n_antennas, 0.05)};
    const auto report = alternating_optimize(sc, std::make_pair(apv, awv),
                                             convex::SolverSettings{});
    REQUIRE(report.status == convex::SolveStatus::Optimal);
    CHECK(report.solution.delta >= min_signal_gain(awv, apv, sc) - 1e-8);
}

TEST_CASE("complexity probe reports one row per configuration") {
    const auto rows = complexity_probe({3, 4}, {1}, 123);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(row.seconds >= 0.0);
        CHECK(row.outer_iterations >= 1);
    }
    CHECK(rows[0].n_antennas == 3);
    CHECK(rows[1].n_antennas == 4);
}

TEST_CASE("the restart entry point never falls below the grid-search point") {
    // Scenarios where the weight pass leaves the interference caps active at
    // the spectral start, so the plain alternation cannot move the positions
    // and only the grid-search restart reaches a competitive geometry.
    for (std::uint64_t seed : {1002, 1003, 1004}) {
        Scenario sc = random_scenario(seed, 4, 2, 2);
        sc.aperture = 10.0;
        const convex::SolverSettings settings;
        const RunReport joint = joint_optimize(sc, settings);
        const Solution grid = aps_baseline(sc, settings);
        REQUIRE(joint.status == convex::SolveStatus::Optimal);
        CHECK(joint.solution.delta >= grid.delta - 1e-8);
        for (int l = 0; l < joint.solution.interference_gains.size(); ++l)
            CHECK(joint.solution.interference_gains(l) <= sc.interference_cap + 1e-6);
    }
}
