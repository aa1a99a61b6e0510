// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/qcqp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mabeam::convex {

double ConcaveQuad::value(const VectorXd& v) const {
    double val = b.dot(v) + c;
    if (A.size() > 0) val += 0.5 * v.dot(A * v);
    return val;
}

double ConvexQuadCap::value(const VectorXd& v) const {
    double val = b.dot(v) + c;
    if (A.size() > 0) val += 0.5 * v.dot(A * v);
    return val;
}

namespace {

// Constraints on v alone (everything except the delta couplings).
std::vector<QuadForm> v_constraints(const MaxMinQcqp& prob) {
    std::vector<QuadForm> cons;
    for (const auto& p : prob.upper_quads) {
        QuadForm q;
        if (p.A.size() > 0) q.A = p.A;
        q.b = p.b;
        q.c = p.c - p.cap;
        cons.push_back(std::move(q));
    }
    for (Eigen::Index i = 0; i < prob.lin_G.rows(); ++i)
        cons.push_back(QuadForm::linear(prob.lin_G.row(i).transpose(), -prob.lin_h(i)));
    return cons;
}

// Lift a v-constraint to the (v, delta) space.
QuadForm lift(const QuadForm& q, int d) {
    QuadForm out;
    if (q.has_quad()) {
        out.A = MatrixXd::Zero(d + 1, d + 1);
        out.A.topLeftCorner(d, d) = q.A;
    }
    out.b = VectorXd::Zero(d + 1);
    out.b.head(d) = q.b;
    out.c = q.c;
    return out;
}

}  // namespace

QcqpResult solve_maxmin_qcqp(const MaxMinQcqp& prob, const SolverSettings& settings,
                             const std::optional<VectorXd>& warm_start) {
    const int d = prob.dim;
    if (prob.lower_quads.empty())
        throw std::invalid_argument("max-min QCQP needs at least one lower quadratic");
    QcqpResult res;

    VectorXd guess = warm_start ? *warm_start : VectorXd::Zero(d);
    const auto vcons = v_constraints(prob);
    auto v0 = find_strictly_feasible(vcons, guess, settings, 1e-6);
    if (!v0) {
        res.status = SolveStatus::Infeasible;
        res.v = guess;
        return res;
    }

    std::vector<QuadForm> cons;
    cons.reserve(vcons.size() + prob.lower_quads.size());
    for (const auto& q : vcons) cons.push_back(lift(q, d));
    for (const auto& lq : prob.lower_quads) {
        // delta - q_k(v) <= 0
        QuadForm q;
        if (lq.A.size() > 0) {
            q.A = MatrixXd::Zero(d + 1, d + 1);
            q.A.topLeftCorner(d, d) = -lq.A;
        }
        q.b = VectorXd::Zero(d + 1);
        q.b.head(d) = -lq.b;
        q.b(d) = 1.0;
        q.c = -lq.c;
        cons.push_back(std::move(q));
    }

    double min_q = std::numeric_limits<double>::infinity();
    for (const auto& lq : prob.lower_quads) min_q = std::min(min_q, lq.value(*v0));

    VectorXd y0(d + 1);
    y0.head(d) = *v0;
    y0(d) = min_q - 1.0 - 1e-3 * std::abs(min_q);

    VectorXd c_obj = VectorXd::Zero(d + 1);
    c_obj(d) = -1.0;

    BarrierResult br = minimize_linear_over_quadratics(c_obj, cons, y0, settings);
    res.v = br.y.head(d);
    res.delta = br.y(d);
    res.status = br.status;
    res.newton_iters = br.newton_iters;
    res.kkt_residual = br.kkt_residual;
    res.barrier_monotone = br.barrier_monotone;
    return res;
}

EigCheck eig_check(const MatrixXd& M, EigKind kind, double rel_tol) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(M, Eigen::EigenvaluesOnly);
    const VectorXd ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1.0);
    EigCheck out;
    if (kind == EigKind::NSD) {
        out.extreme_eigenvalue = ev.maxCoeff();
        out.pass = out.extreme_eigenvalue <= rel_tol * scale;
    } else {
        out.extreme_eigenvalue = ev.minCoeff();
        out.pass = out.extreme_eigenvalue >= -rel_tol * scale;
    }
    return out;
}

}  // namespace mabeam::convex
