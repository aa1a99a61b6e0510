// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/spectral_init.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace mabeam {

using convex::SolveStatus;

Apv uniform_apv(const Scenario& sc) {
    const int n = sc.n_antennas;
    double spacing = sc.aperture / (n + 1);
    double start = spacing;
    if (spacing < sc.min_spacing) {
        // Centered D0-spaced fallback.
        spacing = sc.min_spacing;
        start = 0.5 * (sc.aperture - (n - 1) * spacing);
    }
    Apv apv;
    apv.positions = VecXd::LinSpaced(n, start, start + (n - 1) * spacing);
    if (n == 1) apv.positions(0) = start;
    return apv;
}

convex::SdpResult solve_p0(const Apv& x0, const Scenario& sc,
                           const convex::SolverSettings& settings) {
    convex::SdpMaxMin prob;
    prob.dim = sc.n_antennas;
    for (double theta : sc.signal_dirs) {
        const VecXcd a = steering_vector(x0, theta);
        prob.lower_traces.push_back(a * a.adjoint());
    }
    for (double phi : sc.interference_dirs) {
        const VecXcd a = steering_vector(x0, phi);
        prob.upper_traces.push_back(a * a.adjoint());
        prob.upper_caps.push_back(sc.interference_cap);
    }
    prob.trace_budget = 1.0;
    return convex::solve_sdp_maxmin(prob, settings);
}

AutocorrSeq autocorrelation(const MatXcd& W0) {
    const int n = static_cast<int>(W0.rows());
    AutocorrSeq seq;
    seq.r = VecXcd::Zero(2 * n - 1);
    for (int m = 1; m <= 2 * n - 1; ++m) {
        std::complex<double> sum = 0.0;
        for (int p = std::max(m - n + 1, 1); p <= std::min(m, n); ++p)
            sum += W0(p - 1, p - m + n - 1);
        seq.r(m - 1) = sum;
    }
    return seq;
}

AutocorrSeq autocorrelation_of(const VecXcd& w) {
    return autocorrelation(w * w.adjoint());
}

namespace {

// Roots of a complex polynomial (ascending coefficients, nonzero leading
// coefficient) via the companion matrix.
VecXcd poly_roots(const VecXcd& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    MatXcd companion = MatXcd::Zero(deg, deg);
    companion.diagonal(-1).setOnes();
    companion.col(deg - 1) = -coeffs.head(deg) / coeffs(deg);
    Eigen::ComplexEigenSolver<MatXcd> es(companion, false);
    return es.eigenvalues();
}

VecXcd poly_from_roots(const std::vector<std::complex<double>>& roots) {
    VecXcd coeffs = VecXcd::Zero(roots.size() + 1);
    coeffs(0) = 1.0;
    for (size_t i = 0; i < roots.size(); ++i) {
        // multiply by (z - root)
        for (Eigen::Index j = static_cast<Eigen::Index>(i) + 1; j >= 1; --j)
            coeffs(j) = coeffs(j - 1) - roots[i] * coeffs(j);
        coeffs(0) *= -roots[i];
    }
    return coeffs;  // ascending order
}

void canonicalize_phase(VecXcd& w) {
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (std::abs(w(i)) > 1e-12) {
            w *= std::polar(1.0, -std::arg(w(i)));
            break;
        }
    }
}

double autocorr_mismatch(const VecXcd& w, const AutocorrSeq& target) {
    return (autocorrelation_of(w).r - target.r).cwiseAbs().maxCoeff();
}

}  // namespace

Awv spectral_factorize(const AutocorrSeq& seq) {
    const int n = seq.weight_len();
    const double lag0 = seq.lag0().real();
    if (lag0 < 0.0) throw FactorizationFailure("negative zero-lag autocorrelation");

    VecXcd w = VecXcd::Zero(n);
    if (n == 1) {
        w(0) = std::sqrt(std::max(lag0, 0.0));
        return Awv{w};
    }

    const VecXcd& c = seq.r;
    const double scale = c.cwiseAbs().maxCoeff();
    if (scale <= 0.0) return Awv{w};  // all-zero weights
    const double trim_tol = 1e-12 * scale;

    int lo = 0, hi = static_cast<int>(c.size()) - 1;
    while (lo < hi && std::abs(c(lo)) < trim_tol && std::abs(c(hi)) < trim_tol) {
        ++lo;
        --hi;
    }
    const int deg = hi - lo;
    if (deg == 0) {
        // Impulse autocorrelation: a single active antenna.
        w(0) = std::sqrt(lag0);
        return Awv{w};
    }
    if (deg % 2 != 0)
        throw FactorizationFailure("autocorrelation polynomial has odd effective degree");

    const VecXcd trimmed = c.segment(lo, deg + 1);
    VecXcd roots = poly_roots(trimmed);

    // Roots come in conjugate-reciprocal pairs; the deg/2 smallest-modulus
    // roots are the minimum-phase (in-circle) members, with unit-circle
    // double roots split evenly by the tie.
    std::vector<int> order(roots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::abs(roots(a)) < std::abs(roots(b)); });
    std::vector<std::complex<double>> selected;
    for (int i = 0; i < deg / 2; ++i) selected.push_back(roots(order[i]));

    VecXcd v = poly_from_roots(selected);
    const double beta = std::sqrt(lag0 / v.squaredNorm());
    w.head(v.size()) = beta * v;
    canonicalize_phase(w);

    if (autocorr_mismatch(w, seq) > tol::spec * std::max(1.0, scale)) {
        throw FactorizationFailure(
            "unit-circle root pairing ill-conditioned: reconstructed autocorrelation "
            "does not match the input");
    }
    return Awv{w};
}

Awv weights_from_covariance(const MatXcd& W0) {
    Eigen::SelfAdjointEigenSolver<MatXcd> es(W0);
    const VecXd ev = es.eigenvalues();  // ascending
    const int n = static_cast<int>(W0.rows());
    const double lead = ev(n - 1);
    const double second = (n >= 2) ? ev(n - 2) : 0.0;
    if (n == 1 || second <= 1e-6 * lead) {
        VecXcd w = std::sqrt(std::max(lead, 0.0)) * es.eigenvectors().col(n - 1);
        canonicalize_phase(w);
        return Awv{w};
    }
    return spectral_factorize(autocorrelation(W0));
}

std::pair<Apv, Awv> initialize(const Scenario& sc, const convex::SolverSettings& settings) {
    const Apv x0 = uniform_apv(sc);
    const convex::SdpResult p0 = solve_p0(x0, sc, settings);
    if (p0.status == SolveStatus::Infeasible)
        throw std::runtime_error("initialization SDP infeasible");
    return {x0, weights_from_covariance(p0.W)};
}

}  // namespace mabeam
