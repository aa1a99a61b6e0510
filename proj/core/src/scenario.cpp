// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/scenario.hpp"

#include <cmath>
#include <random>

namespace mabeam {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_angles_open_interval(const std::vector<double>& angles, const char* what) {
    for (double a : angles) {
        if (!(a > 0.0 && a < kPi))
            throw ScenarioError(std::string(what) + " angle outside (0, pi)");
    }
}
}  // namespace

void Scenario::validate() const {
    if (n_antennas < 1) throw ScenarioError("n_antennas must be >= 1");
    if (!(aperture > 0.0)) throw ScenarioError("aperture must be positive");
    if (!(min_spacing > 0.0)) throw ScenarioError("min_spacing must be positive");
    if ((n_antennas - 1) * min_spacing > aperture)
        throw ScenarioError("(N-1)*min_spacing exceeds aperture, no feasible positions");
    if (interference_cap < 0.0) throw ScenarioError("interference_cap must be >= 0");
    if (signal_dirs.empty()) throw ScenarioError("at least one signal direction required");
    check_angles_open_interval(signal_dirs, "signal");
    check_angles_open_interval(interference_dirs, "interference");
    // Gains depend on directions only through their cosines, so disjointness
    // is measured in spatial frequency.
    for (double th : signal_dirs)
        for (double ph : interference_dirs)
            if (std::abs(std::cos(th) - std::cos(ph)) < tol::cos_sep)
                throw ScenarioError("signal and interference directions too close");
    if (!(eps_outer > 0.0 && eps_awv > 0.0 && eps_apv > 0.0))
        throw ScenarioError("convergence thresholds must be positive");
    if (max_outer < 1 || max_awv_iters < 1 || max_apv_iters < 1)
        throw ScenarioError("iteration caps must be >= 1");
}

void draw_random_directions(int n_signal, int n_interference, std::uint64_t seed,
                            std::vector<double>& signal_out,
                            std::vector<double>& interference_out) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(1e-6, kPi - 1e-6);
    const double min_angle_gap = deg_to_rad(0.1);

    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<double> sig(n_signal), intf(n_interference);
        for (double& a : sig) a = dist(rng);
        for (double& a : intf) a = dist(rng);

        bool ok = true;
        std::vector<double> all = sig;
        all.insert(all.end(), intf.begin(), intf.end());
        for (size_t i = 0; ok && i < all.size(); ++i)
            for (size_t j = i + 1; ok && j < all.size(); ++j)
                if (std::abs(all[i] - all[j]) < min_angle_gap) ok = false;
        for (double th : sig)
            for (double ph : intf)
                if (std::abs(std::cos(th) - std::cos(ph)) < tol::cos_sep) ok = false;
        if (!ok) continue;

        signal_out = std::move(sig);
        interference_out = std::move(intf);
        return;
    }
    throw ScenarioError("failed to draw separated random directions");
}

}  // namespace mabeam
