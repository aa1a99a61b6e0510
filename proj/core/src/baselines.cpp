// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mabeam/awv_sca.hpp"
#include "mabeam/spectral_init.hpp"

namespace mabeam {

namespace {

Solution make_solution(const Apv& x, const Awv& w, const Scenario& sc, double seconds) {
    Solution sol;
    sol.apv = x;
    sol.awv = w;
    sol.delta = min_signal_gain(w, x, sc);
    sol.signal_gains = signal_gains(w, x, sc);
    sol.interference_gains = interference_gains(w, x, sc);
    sol.wall_time = seconds;
    return sol;
}

Apv half_wavelength_ula(const Scenario& sc) {
    if ((sc.n_antennas - 1) * 0.5 > sc.aperture)
        throw std::invalid_argument("half-wavelength ULA does not fit the aperture");
    Apv x;
    x.positions = 0.5 * VecXd::LinSpaced(sc.n_antennas, 0.0, sc.n_antennas - 1.0);
    return x;
}

bool positions_feasible(const VecXd& sorted, const Scenario& sc) {
    if (sorted(0) < -1e-9 || sorted(sorted.size() - 1) > sc.aperture + 1e-9) return false;
    for (Eigen::Index i = 1; i < sorted.size(); ++i)
        if (sorted(i) - sorted(i - 1) < sc.min_spacing - 1e-9) return false;
    return true;
}

}  // namespace

Solution fpa_baseline(const Scenario& sc, const convex::SolverSettings& settings) {
    sc.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const Apv x = half_wavelength_ula(sc);
    const convex::SdpResult p0 = solve_p0(x, sc, settings);
    if (p0.status == convex::SolveStatus::Infeasible)
        throw std::runtime_error("fixed-position SDP infeasible");
    const Awv w = weights_from_covariance(p0.W);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return make_solution(x, w, sc, secs);
}

Solution aps_baseline(const Scenario& sc, const convex::SolverSettings& settings) {
    sc.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const double d0 = sc.min_spacing;
    const int grid_count = static_cast<int>(std::floor(sc.aperture / d0 + 1e-9)) + 1;
    if (grid_count < sc.n_antennas)
        throw std::invalid_argument("position grid has fewer points than antennas");

    Apv x;
    x.positions = d0 * VecXd::LinSpaced(sc.n_antennas, 0.0, sc.n_antennas - 1.0);
    const convex::SdpResult p0_init = solve_p0(x, sc, settings);
    if (p0_init.status == convex::SolveStatus::Infeasible)
        throw std::runtime_error("grid ULA SDP infeasible");
    Awv w = weights_from_covariance(p0_init.W);
    double delta = min_signal_gain(w, x, sc);

    // Each candidate geometry is scored with its own weight pass (a short
    // warm-started SCA run); scoring a move with the incumbent weights stalls
    // because their interference caps are active, which pins every antenna.
    Scenario score_sc = sc;
    score_sc.max_awv_iters = 8;

    // Sequential per-antenna exhaustive search over the grid.
    for (int sweep = 0; sweep < 20; ++sweep) {
        bool moved = false;
        for (int n = 0; n < sc.n_antennas; ++n) {
            double best_gain = delta;
            double best_pos = x.positions(n);
            Awv best_w = w;
            for (int gi = 0; gi < grid_count; ++gi) {
                const double g = gi * d0;
                if (g == x.positions(n)) continue;  // ties keep the incumbent
                VecXd cand = x.positions;
                cand(n) = g;
                std::sort(cand.data(), cand.data() + cand.size());
                if (!positions_feasible(cand, sc)) continue;
                const Apv cand_apv{cand};
                AwvOptResult wres = optimize_awv(cand_apv, w, score_sc, settings);
                if (wres.status != convex::SolveStatus::Optimal) continue;
                const double gain = min_signal_gain(wres.awv, cand_apv, sc);
                if (gain > best_gain + 1e-6) {
                    best_gain = gain;
                    best_pos = g;
                    best_w = wres.awv;
                }
            }
            if (best_pos != x.positions(n)) {
                x.positions(n) = best_pos;
                std::sort(x.positions.data(), x.positions.data() + x.positions.size());
                w = best_w;
                delta = best_gain;
                moved = true;
            }
        }
        if (!moved) break;
    }

    // Exact weight refresh at the final geometry.
    const convex::SdpResult p0_fin = solve_p0(x, sc, settings);
    if (p0_fin.status == convex::SolveStatus::Optimal) {
        const AwvOptResult wres =
            optimize_awv(x, weights_from_covariance(p0_fin.W), sc, settings);
        if (wres.status == convex::SolveStatus::Optimal &&
            min_signal_gain(wres.awv, x, sc) > delta)
            w = wres.awv;
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return make_solution(x, w, sc, secs);
}

Solution awi_baseline(const Scenario& sc, const convex::SolverSettings& settings) {
    RunReport report = alternating_optimize(sc, std::nullopt, settings, 1);
    return report.solution;
}

}  // namespace mabeam
