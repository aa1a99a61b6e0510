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

#include "mabeam/baselines.hpp"
#include "mabeam/spectral_init.hpp"

using namespace mabeam;

namespace {

Scenario small_scenario() {
    Scenario sc;
    sc.n_antennas = 4;
    sc.aperture = 4.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(45.0), deg_to_rad(115.0)};
    sc.interference_dirs = {deg_to_rad(80.0)};
    return sc;
}

bool on_half_wavelength_grid(const Apv& apv) {
    for (int i = 0; i < apv.size(); ++i) {
        const double q = apv.positions(i) / 0.5;
        if (std::abs(q - std::round(q)) > 1e-9) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("fixed-position baseline reaches the full gain for a single beam") {
    Scenario sc;
    sc.n_antennas = 6;
    sc.aperture = 4.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(60.0)};

    const Solution sol = fpa_baseline(sc, convex::SolverSettings{});
    CHECK(sol.delta == doctest::Approx(double(sc.n_antennas)).epsilon(1e-3));
    CHECK(validate_solution(sol, sc).feasible());
    CHECK(on_half_wavelength_grid(sol.apv));
    // positions are the standard ULA starting at the origin
    for (int i = 0; i < sc.n_antennas; ++i)
        CHECK(sol.apv.positions(i) == doctest::Approx(0.5 * i).epsilon(1e-12));
}

TEST_CASE("grid-search baseline stays on the grid and is feasible") {
    const Scenario sc = small_scenario();
    const Solution sol = aps_baseline(sc, convex::SolverSettings{});
    CHECK(validate_solution(sol, sc).feasible());
    CHECK(on_half_wavelength_grid(sol.apv));
    CHECK(sol.delta > 0.0);
}

TEST_CASE("one-antenna array is handled by every baseline") {
    Scenario sc;
    sc.n_antennas = 1;
    sc.aperture = 2.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 1.5;  // a single element cannot null anything
    sc.signal_dirs = {deg_to_rad(90.0)};

    for (const Solution& sol : {fpa_baseline(sc, convex::SolverSettings{}),
                                aps_baseline(sc, convex::SolverSettings{}),
                                awi_baseline(sc, convex::SolverSettings{})}) {
        CHECK(validate_solution(sol, sc).feasible());
        CHECK(sol.delta == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("scheme ordering: proposed >= one-iteration variant >= relaxation start") {
    const Scenario sc = small_scenario();
    const convex::SolverSettings settings;

    const auto [apv0, awv0] = initialize(sc, settings);
    const double delta0 = min_signal_gain(awv0, apv0, sc);

    const Solution awi = awi_baseline(sc, settings);
    const auto full = alternating_optimize(sc, std::nullopt, settings);
    REQUIRE(full.status == convex::SolveStatus::Optimal);

    CHECK(awi.delta >= delta0 - 1e-6);
    CHECK(full.solution.delta >= awi.delta - 1e-6);
    CHECK(validate_solution(awi, sc).feasible());
}
