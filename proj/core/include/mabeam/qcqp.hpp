// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_QCQP_HPP
#define MABEAM_QCQP_HPP

#include <optional>
#include <vector>

#include "mabeam/barrier.hpp"

namespace mabeam::convex {

// Concave quadratic q(v) = 0.5 v'Av + b'v + c with A negative semi-definite.
struct ConcaveQuad {
    MatrixXd A;  // NSD; size 0 means linear
    VectorXd b;
    double c = 0.0;

    double value(const VectorXd& v) const;
};

// Convex quadratic p(v) = 0.5 v'Av + b'v + c with A positive semi-definite,
// constrained p(v) <= cap.
struct ConvexQuadCap {
    MatrixXd A;  // PSD; size 0 means linear
    VectorXd b;
    double c = 0.0;
    double cap = 0.0;

    double value(const VectorXd& v) const;
};

// maximize delta  s.t.  q_k(v) >= delta,  p_l(v) <= cap_l,  G v <= h
struct MaxMinQcqp {
    int dim = 0;
    std::vector<ConcaveQuad> lower_quads;
    std::vector<ConvexQuadCap> upper_quads;
    MatrixXd lin_G;  // may be 0 x dim
    VectorXd lin_h;
};

struct QcqpResult {
    VectorXd v;
    double delta = 0.0;
    SolveStatus status = SolveStatus::NumericalFailure;
    int newton_iters = 0;
    double kkt_residual = 0.0;
    bool barrier_monotone = true;
};

QcqpResult solve_maxmin_qcqp(const MaxMinQcqp& prob, const SolverSettings& settings,
                             const std::optional<VectorXd>& warm_start = std::nullopt);

enum class EigKind { NSD, PSD };

struct EigCheck {
    bool pass = false;
    double extreme_eigenvalue = 0.0;  // max for NSD checks, min for PSD checks
};

// Sign check on the spectrum of a real symmetric matrix, with a tolerance
// relative to the largest absolute eigenvalue.
EigCheck eig_check(const MatrixXd& M, EigKind kind, double rel_tol = 1e-8);

}  // namespace mabeam::convex

#endif
