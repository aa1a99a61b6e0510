// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_APV_SCA_HPP
#define MABEAM_APV_SCA_HPP

#include <vector>

#include "mabeam/array.hpp"
#include "mabeam/qcqp.hpp"

namespace mabeam {

// Amplitude/phase split of a weight vector, shared by the position
// surrogate builders.
struct WeightAmplitudeProfile {
    VecXd amplitudes;  // |w_n|
    VecXd phases;      // angle(w_n)
    double gamma;      // sum |w_n|

    explicit WeightAmplitudeProfile(const Awv& w);
};

// One quadratic surrogate 0.5 x'Ax + b'x + c of the gain in the positions,
// expanded at x_i. Signal-side surrogates lower-bound the gain (A NSD),
// interference-side surrogates upper-bound it (A PSD).
struct SurrogateQuadratic {
    MatXd A;
    VecXd b;
    double c = 0.0;
    bool is_signal = false;
    int direction_index = -1;
    VecXd expansion_point;

    double value(const VecXd& x) const;
};

SurrogateQuadratic signal_surrogate(const Awv& w, const Apv& x_i, double theta_k);
SurrogateQuadratic interference_surrogate(const Awv& w, const Apv& x_i, double phi_l);

// Scalar building blocks: concave minorizer and convex majorizer of cos(z)
// from the second-order expansion at z0 with the curvature bounded by one.
double cos_minorizer(double z, double z0);
double cos_majorizer(double z, double z0);

struct ApvOptResult {
    Apv apv;
    std::vector<double> delta_trace;
    convex::SolveStatus status = convex::SolveStatus::Optimal;
    bool stalled = false;  // a subproblem was infeasible; position kept as-is
};

ApvOptResult optimize_apv(const Awv& w, const Apv& x_init, const Scenario& sc,
                          const convex::SolverSettings& settings);

}  // namespace mabeam

#endif
