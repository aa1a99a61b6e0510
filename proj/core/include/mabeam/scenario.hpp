// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_SCENARIO_HPP
#define MABEAM_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mabeam {

// Feasibility / numerical tolerances used throughout the library.
namespace tol {
inline constexpr double norm = 1e-8;       // slack on the weight-norm budget
inline constexpr double feas = 1e-6;       // generic constraint-violation slack
inline constexpr double eig = 1e-8;        // relative eigenvalue sign tolerance
inline constexpr double spec = 1e-6;       // spectral-factorization roundtrip error
inline constexpr double cos_sep = 1e-3;    // min |cos(theta)-cos(phi)| separation
}  // namespace tol

// One complete problem instance. All lengths are in wavelengths (the
// wavelength is normalized to 1), all angles in radians within (0, pi).
struct Scenario {
    int n_antennas = 0;              // N
    double aperture = 0.0;           // D, length of the positioning segment
    double min_spacing = 0.0;        // D0, minimum adjacent antenna distance
    double interference_cap = 0.0;   // eta, max allowed interference gain
    std::vector<double> signal_dirs;       // theta_k
    std::vector<double> interference_dirs; // phi_l

    double eps_outer = 1e-4;  // outer convergence threshold on delta
    double eps_awv = 1e-2;    // weight-loop threshold
    double eps_apv = 1e-2;    // position-loop threshold
    int max_outer = 50;
    int max_awv_iters = 100;
    int max_apv_iters = 100;
    std::uint64_t rng_seed = 0;

    int num_signal() const { return static_cast<int>(signal_dirs.size()); }
    int num_interference() const { return static_cast<int>(interference_dirs.size()); }

    // Throws std::invalid_argument on the first violated invariant.
    void validate() const;
};

struct ScenarioError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline double deg_to_rad(double deg) { return deg * 3.14159265358979323846 / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / 3.14159265358979323846; }

// Draws K signal and L interference directions uniformly over (0, pi),
// redrawing the whole tuple until the spatial-frequency disjointness guard
// and a 0.1 degree pairwise separation hold.
void draw_random_directions(int n_signal, int n_interference, std::uint64_t seed,
                            std::vector<double>& signal_out,
                            std::vector<double>& interference_out);

}  // namespace mabeam

#endif
