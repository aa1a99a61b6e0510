// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_ARRAY_HPP
#define MABEAM_ARRAY_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "mabeam/scenario.hpp"

namespace mabeam {

using VecXd = Eigen::VectorXd;
using VecXcd = Eigen::VectorXcd;
using MatXd = Eigen::MatrixXd;
using MatXcd = Eigen::MatrixXcd;

// Ordered antenna position vector, wavelength units.
struct Apv {
    VecXd positions;

    int size() const { return static_cast<int>(positions.size()); }

    // Checks 0 <= x_1 < ... < x_N <= D and adjacent spacing >= D0.
    bool is_feasible(const Scenario& sc, double slack = tol::feas) const;
};

// Complex antenna weight vector with a unit total-power budget.
struct Awv {
    VecXcd weights;

    int size() const { return static_cast<int>(weights.size()); }
    double norm() const { return weights.norm(); }
    VecXd amplitudes() const { return weights.cwiseAbs(); }
    VecXd phases() const;
};

struct Solution {
    Apv apv;
    Awv awv;
    double delta = 0.0;                 // min gain over the signal directions
    VecXd signal_gains;
    VecXd interference_gains;
    std::vector<double> outer_trace;    // delta after each outer iteration
    double wall_time = 0.0;             // seconds
};

struct ConstraintViolation {
    std::string constraint;  // which constraint
    double magnitude;        // by how much it is violated
};

struct FeasibilityReport {
    std::vector<ConstraintViolation> violations;
    bool feasible() const { return violations.empty(); }
};

// Per-element phase response of the array toward angle theta, entry n is
// exp(j*2*pi*x_n*cos(theta)).
VecXcd steering_vector(const Apv& apv, double theta);

// |w^H alpha(x, theta)|^2
double beam_gain(const Awv& awv, const Apv& apv, double theta);

std::vector<std::pair<double, double>> beam_pattern(const Awv& awv, const Apv& apv,
                                                    const std::vector<double>& grid);

VecXd signal_gains(const Awv& awv, const Apv& apv, const Scenario& sc);
VecXd interference_gains(const Awv& awv, const Apv& apv, const Scenario& sc);
double min_signal_gain(const Awv& awv, const Apv& apv, const Scenario& sc);

// Checks spacing, box, weight-norm, and interference-cap constraints.
FeasibilityReport validate_solution(const Solution& sol, const Scenario& sc);

}  // namespace mabeam

#endif
