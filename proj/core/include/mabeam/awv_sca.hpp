// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_AWV_SCA_HPP
#define MABEAM_AWV_SCA_HPP

#include <vector>

#include "mabeam/array.hpp"
#include "mabeam/qcqp.hpp"

namespace mabeam {

// Linear minorizer of the gain at one signal direction, expanded at w_t:
//   Gbar(w) = Re{d^H w} + offset,
// tight at w_t and globally below the true gain (the gain is convex in w).
struct AwvLinearFunctional {
    VecXcd d;        // 2 * alpha alpha^H w_t
    double offset;   // -G(w_t, x, theta)

    double value(const VecXcd& w) const;
};

struct AwvLinearSurrogate {
    std::vector<AwvLinearFunctional> per_signal;  // one per theta_k
};

AwvLinearSurrogate build_awv_surrogate(const Awv& w_t, const Apv& apv, const Scenario& sc);

struct AwvOptResult {
    Awv awv;
    std::vector<double> delta_trace;  // surrogate optimum per SCA iteration
    convex::SolveStatus status = convex::SolveStatus::Optimal;
};

// Iterates the weight subproblem at fixed positions until the increase of
// the surrogate optimum falls below eps_awv or the iteration cap is hit.
AwvOptResult optimize_awv(const Apv& apv, const Awv& w_init, const Scenario& sc,
                          const convex::SolverSettings& settings);

}  // namespace mabeam

#endif
