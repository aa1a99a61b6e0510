// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/barrier.hpp"

#include <cmath>
#include <limits>

namespace mabeam::convex {

double QuadForm::value(const VectorXd& y) const {
    double v = b.dot(y) + c;
    if (has_quad()) v += 0.5 * y.dot(A * y);
    return v;
}

VectorXd QuadForm::grad(const VectorXd& y) const {
    if (has_quad()) return A * y + b;
    return b;
}

QuadForm QuadForm::linear(const VectorXd& b, double c) {
    QuadForm q;
    q.b = b;
    q.c = c;
    return q;
}

namespace {

// t * c'y - sum log(-f_i)
double barrier_value(double t, const VectorXd& c_obj, const std::vector<QuadForm>& cons,
                     const VectorXd& y) {
    double phi = t * c_obj.dot(y);
    for (const auto& q : cons) {
        const double f = q.value(y);
        if (f >= 0.0) return std::numeric_limits<double>::infinity();
        phi -= std::log(-f);
    }
    return phi;
}

}  // namespace

BarrierResult minimize_linear_over_quadratics(const VectorXd& c_obj,
                                              const std::vector<QuadForm>& constraints,
                                              const VectorXd& y0,
                                              const SolverSettings& settings) {
    const int n = static_cast<int>(y0.size());
    const int m = static_cast<int>(constraints.size());
    BarrierResult res;
    res.y = y0;
    res.objective = c_obj.dot(y0);

    for (const auto& q : constraints) {
        if (q.value(y0) >= 0.0) return res;  // start not strictly feasible
    }

    VectorXd y = y0;
    double t = settings.barrier_t0;

    VectorXd grad(n);
    MatrixXd hess(n, n);

    while (true) {
        // Newton centering at the current t. The decrement threshold scales
        // with the barrier objective: near the end t is large and absolute
        // decrements below the representable resolution of phi are noise.
        int stage_iters = 0;
        for (;;) {
            if (stage_iters >= settings.max_newton_iters)
                break;  // off-center but usable; t keeps growing
            grad = t * c_obj;
            hess.setZero();
            for (const auto& q : constraints) {
                const double f = q.value(y);
                const VectorXd g = q.grad(y);
                const double inv = 1.0 / (-f);
                grad += inv * g;
                hess += (inv * inv) * (g * g.transpose());
                if (q.has_quad()) hess += inv * q.A;
            }
            Eigen::LDLT<MatrixXd> ldlt(hess);
            VectorXd step = ldlt.solve(-grad);
            if (!step.allFinite()) {
                res.status = SolveStatus::NumericalFailure;
                res.y = y;
                return res;
            }
            const double phi0 = barrier_value(t, c_obj, constraints, y);
            const double decrement2 = -grad.dot(step);
            if (decrement2 * 0.5 < 1e-11) break;

            double alpha = 1.0;
            double phi_new = std::numeric_limits<double>::infinity();
            while (alpha > 1e-14) {
                phi_new = barrier_value(t, c_obj, constraints, y + alpha * step);
                if (phi_new <= phi0 - 1e-4 * alpha * decrement2) break;
                alpha *= 0.5;
            }
            ++res.newton_iters;
            ++stage_iters;
            if (alpha <= 1e-14) break;  // stalled line search, accept center
            if (phi_new > phi0 + 1e-9) res.barrier_monotone = false;
            y += alpha * step;
        }
        if (static_cast<double>(m) / t < settings.accuracy) break;
        t *= settings.barrier_mu;
    }

    res.y = y;
    res.objective = c_obj.dot(y);
    // Stationarity residual with barrier multipliers lambda_i = 1/(t * (-f_i)).
    VectorXd r = c_obj;
    for (const auto& q : constraints) {
        const double f = q.value(y);
        r += (1.0 / (t * (-f))) * q.grad(y);
    }
    res.kkt_residual = r.lpNorm<Eigen::Infinity>();
    res.status = SolveStatus::Optimal;
    return res;
}

std::optional<VectorXd> find_strictly_feasible(const std::vector<QuadForm>& constraints,
                                               const VectorXd& y_guess,
                                               const SolverSettings& settings,
                                               double feas_tol) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& q : constraints) worst = std::max(worst, q.value(y_guess));
    if (worst <= -1e-8) return y_guess;

    // Minimize a shared slack s over (y, s) with f_i(y) - s <= 0 and s >= -1.
    const int n = static_cast<int>(y_guess.size());
    std::vector<QuadForm> aug;
    aug.reserve(constraints.size() + 1);
    for (const auto& q : constraints) {
        QuadForm a;
        if (q.has_quad()) {
            a.A = MatrixXd::Zero(n + 1, n + 1);
            a.A.topLeftCorner(n, n) = q.A;
        }
        a.b = VectorXd::Zero(n + 1);
        a.b.head(n) = q.b;
        a.b(n) = -1.0;
        a.c = q.c;
        aug.push_back(std::move(a));
    }
    {
        VectorXd bs = VectorXd::Zero(n + 1);
        bs(n) = -1.0;
        aug.push_back(QuadForm::linear(bs, -1.0));  // s >= -1
    }

    VectorXd z0(n + 1);
    z0.head(n) = y_guess;
    z0(n) = worst + 1.0;

    VectorXd c_obj = VectorXd::Zero(n + 1);
    c_obj(n) = 1.0;

    SolverSettings ph = settings;
    ph.accuracy = std::min(settings.accuracy, 1e-8);
    ph.max_newton_iters = std::max(settings.max_newton_iters, 300);
    BarrierResult r = minimize_linear_over_quadratics(c_obj, aug, z0, ph);

    const double s_star = r.y(n);
    (void)feas_tol;  // any nonnegative optimum means no usable interior
    if (s_star > -1e-10) return std::nullopt;
    return r.y.head(n).eval();
}

}  // namespace mabeam::convex
