// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_SDP_HPP
#define MABEAM_SDP_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mabeam/barrier.hpp"

namespace mabeam::convex {

using MatrixXcd = Eigen::MatrixXcd;

// maximize delta0 over Hermitian W >= 0 subject to
//   Tr(W Gamma_k) >= delta0   for each lower matrix,
//   Tr(W Gamma_l) <= cap_l    for each upper matrix,
//   Tr(W) <= trace_budget.
struct SdpMaxMin {
    int dim = 0;  // N
    std::vector<MatrixXcd> lower_traces;
    std::vector<MatrixXcd> upper_traces;
    std::vector<double> upper_caps;
    double trace_budget = 1.0;
};

struct SdpResult {
    MatrixXcd W;
    double delta0 = 0.0;
    SolveStatus status = SolveStatus::NumericalFailure;
    int newton_iters = 0;
};

// Primal log-barrier interior-point solve over the realified (2N x 2N)
// symmetric embedding of W, with a -log det barrier for the PSD cone.
SdpResult solve_sdp_maxmin(const SdpMaxMin& prob, const SolverSettings& settings);

// [[Re G, -Im G], [Im G, Re G]] symmetric embedding of a Hermitian matrix.
MatrixXd realify_hermitian(const MatrixXcd& G);

}  // namespace mabeam::convex

#endif
