// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_BARRIER_HPP
#define MABEAM_BARRIER_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace mabeam::convex {

using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class SolveStatus { Optimal, Infeasible, NumericalFailure };

struct SolverSettings {
    double accuracy = 1e-7;       // target duality gap (beta)
    int max_newton_iters = 200;   // Newton steps per centering stage
    double barrier_t0 = 1.0;
    double barrier_mu = 10.0;
};

// Convex quadratic constraint f(y) = 0.5 y'Ay + b'y + c <= 0.
// A of size 0 means a purely linear constraint.
struct QuadForm {
    MatrixXd A;
    VectorXd b;
    double c = 0.0;

    double value(const VectorXd& y) const;
    VectorXd grad(const VectorXd& y) const;
    bool has_quad() const { return A.size() > 0; }

    static QuadForm linear(const VectorXd& b, double c);
};

struct BarrierResult {
    VectorXd y;
    double objective = 0.0;       // c_obj . y at the solution
    SolveStatus status = SolveStatus::NumericalFailure;
    int newton_iters = 0;
    double kkt_residual = 0.0;    // inf-norm stationarity residual at exit
    bool barrier_monotone = true; // barrier objective decreased at each step
};

// Minimizes c_obj . y over { y : f_i(y) <= 0 } by a primal log-barrier
// method with damped Newton centering. y0 must be strictly feasible.
BarrierResult minimize_linear_over_quadratics(const VectorXd& c_obj,
                                              const std::vector<QuadForm>& constraints,
                                              const VectorXd& y0,
                                              const SolverSettings& settings);

// Phase-I: finds a strictly feasible point for the constraint set starting
// from an arbitrary guess, by minimizing a shared slack. Returns nullopt if
// the best achievable slack stays above feas_tol.
std::optional<VectorXd> find_strictly_feasible(const std::vector<QuadForm>& constraints,
                                               const VectorXd& y_guess,
                                               const SolverSettings& settings,
                                               double feas_tol);

}  // namespace mabeam::convex

#endif
