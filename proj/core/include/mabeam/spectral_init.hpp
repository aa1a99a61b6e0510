// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_SPECTRAL_INIT_HPP
#define MABEAM_SPECTRAL_INIT_HPP

#include <stdexcept>

#include "mabeam/array.hpp"
#include "mabeam/sdp.hpp"

namespace mabeam {

// Autocorrelation lags of a weight vector, length 2N-1, lag zero at index
// N-1 (0-based). Conjugate-symmetric; nonnegative on the unit circle when
// extracted from a PSD matrix.
struct AutocorrSeq {
    VecXcd r;

    int weight_len() const { return static_cast<int>((r.size() + 1) / 2); }
    std::complex<double> lag0() const { return r(weight_len() - 1); }
};

struct FactorizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform starting positions with spacing D/(N+1); falls back to spacing
// D0 centered in [0, D] when that spacing would violate the minimum.
Apv uniform_apv(const Scenario& sc);

// The SDP that yields the globally optimal weight covariance for a ULA.
convex::SdpResult solve_p0(const Apv& x0, const Scenario& sc,
                           const convex::SolverSettings& settings);

// Anti-diagonal band sums of W; the lag-m entry collects W[p, p-m+N]
// (1-based m = 1..2N-1).
AutocorrSeq autocorrelation(const MatXcd& W0);

// Direct autocorrelation of a weight vector.
AutocorrSeq autocorrelation_of(const VecXcd& w);

// Minimum-phase spectral factor: a weight vector whose autocorrelation
// reproduces r. Throws FactorizationFailure on ill-conditioned root pairing.
Awv spectral_factorize(const AutocorrSeq& r);

// Full initialization pipeline: uniform positions, (P0), autocorrelation,
// spectral factorization (or a rank-one eigen shortcut).
std::pair<Apv, Awv> initialize(const Scenario& sc, const convex::SolverSettings& settings);

// Weight recovery from a PSD weight covariance for a given (uniform)
// geometry; shared by the initializer and the fixed-position baseline.
Awv weights_from_covariance(const MatXcd& W0);

}  // namespace mabeam

#endif
