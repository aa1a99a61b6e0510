// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/sdp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mabeam::convex {

MatrixXd realify_hermitian(const MatrixXcd& G) {
    const int n = static_cast<int>(G.rows());
    MatrixXd R(2 * n, 2 * n);
    const MatrixXd X = G.real();
    const MatrixXd Y = G.imag();
    R.topLeftCorner(n, n) = X;
    R.topRightCorner(n, n) = -Y;
    R.bottomLeftCorner(n, n) = Y;
    R.bottomRightCorner(n, n) = X;
    return R;
}

namespace {

// Lower-triangular parametrization of a symmetric matrix.
struct SymBasis {
    int n = 0;
    std::vector<std::pair<int, int>> idx;  // (i, j) with i >= j

    explicit SymBasis(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) idx.emplace_back(i, j);
    }
    int count() const { return static_cast<int>(idx.size()); }

    MatrixXd to_matrix(const VectorXd& p) const {
        MatrixXd S(n, n);
        for (int a = 0; a < count(); ++a) {
            S(idx[a].first, idx[a].second) = p(a);
            S(idx[a].second, idx[a].first) = p(a);
        }
        return S;
    }
    VectorXd from_matrix(const MatrixXd& S) const {
        VectorXd p(count());
        for (int a = 0; a < count(); ++a) p(a) = S(idx[a].first, idx[a].second);
        return p;
    }
    // Coefficients of param a in Tr(S G)/2 for symmetric G.
    VectorXd trace_coeffs(const MatrixXd& G) const {
        VectorXd g(count());
        for (int a = 0; a < count(); ++a) {
            const auto [i, j] = idx[a];
            g(a) = (i == j) ? 0.5 * G(i, i) : G(i, j);
        }
        return g;
    }
};

double log_det_or_inf(const MatrixXd& S, Eigen::LLT<MatrixXd>& llt) {
    llt.compute(S);
    if (llt.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();
    double ld = 0.0;
    const auto& L = llt.matrixLLT();
    for (Eigen::Index i = 0; i < S.rows(); ++i) {
        const double d = L(i, i);
        if (!(d > 0.0)) return -std::numeric_limits<double>::infinity();
        ld += std::log(d);
    }
    return 2.0 * ld;
}

}  // namespace

SdpResult solve_sdp_maxmin(const SdpMaxMin& prob, const SolverSettings& settings) {
    const int N = prob.dim;
    if (N < 1) throw std::invalid_argument("SDP dimension must be >= 1");
    if (prob.lower_traces.empty())
        throw std::invalid_argument("max-min SDP needs at least one lower trace matrix");
    if (prob.upper_traces.size() != prob.upper_caps.size())
        throw std::invalid_argument("upper_traces and upper_caps size mismatch");

    // A near-zero cap leaves no usable log-det interior (it forces matching
    // eigenvalues of W below ~cap/N). Treat such caps as exact nulls: restrict
    // W to the orthogonal complement of those constraint ranges and solve the
    // reduced problem.
    constexpr double kNullCap = 1e-6;
    bool has_null = false;
    for (double cap : prob.upper_caps)
        if (cap < kNullCap) has_null = true;
    if (has_null) {
        std::vector<Eigen::VectorXcd> span;
        for (size_t l = 0; l < prob.upper_caps.size(); ++l) {
            if (prob.upper_caps[l] >= kNullCap) continue;
            Eigen::SelfAdjointEigenSolver<MatrixXcd> es(prob.upper_traces[l]);
            const double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
            for (int i = 0; i < N; ++i)
                if (es.eigenvalues()(i) > 1e-12 * std::max(lmax, 1.0))
                    span.push_back(es.eigenvectors().col(i));
        }
        MatrixXcd V(N, span.size());
        for (size_t i = 0; i < span.size(); ++i) V.col(i) = span[i];
        Eigen::JacobiSVD<MatrixXcd> svd(V, Eigen::ComputeFullU);
        int rank = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-10) ++rank;
        const int keep = N - rank;
        SdpResult res;
        if (keep == 0) {
            res.W = MatrixXcd::Zero(N, N);
            res.delta0 = 0.0;
            res.status = SolveStatus::Optimal;
            return res;
        }
        const MatrixXcd B = svd.matrixU().rightCols(keep);

        SdpMaxMin reduced;
        reduced.dim = keep;
        reduced.trace_budget = prob.trace_budget;
        for (const auto& G : prob.lower_traces)
            reduced.lower_traces.push_back(B.adjoint() * G * B);
        for (size_t l = 0; l < prob.upper_caps.size(); ++l) {
            if (prob.upper_caps[l] < kNullCap) continue;
            reduced.upper_traces.push_back(B.adjoint() * prob.upper_traces[l] * B);
            reduced.upper_caps.push_back(prob.upper_caps[l]);
        }
        res = solve_sdp_maxmin(reduced, settings);
        res.W = (B * res.W * B.adjoint()).eval();
        return res;
    }

    const int n2 = 2 * N;
    const SymBasis basis(n2);
    const int P = basis.count();
    const int K = static_cast<int>(prob.lower_traces.size());
    const int L = static_cast<int>(prob.upper_traces.size());

    std::vector<MatrixXd> lows, ups;
    std::vector<double> caps;
    for (const auto& G : prob.lower_traces) lows.push_back(realify_hermitian(G));
    for (const auto& G : prob.upper_traces) ups.push_back(realify_hermitian(G));
    for (double cap : prob.upper_caps) caps.push_back(cap);  // all >= kNullCap here
    ups.push_back(MatrixXd::Identity(n2, n2));
    caps.push_back(prob.trace_budget);

    // Linear constraint coefficients over (params, delta0).
    std::vector<VectorXd> low_coeffs, up_coeffs;
    for (const auto& G : lows) low_coeffs.push_back(basis.trace_coeffs(G));
    for (const auto& G : ups) up_coeffs.push_back(basis.trace_coeffs(G));

    // Strictly feasible start: a small multiple of the identity.
    double c0 = 0.9 * prob.trace_budget / N;
    for (size_t l = 0; l < ups.size(); ++l) {
        const double tr = 0.5 * ups[l].trace();  // value of tr at S = I
        if (tr > 0.0) c0 = std::min(c0, 0.9 * caps[l] / tr);
    }
    c0 = std::max(c0, 1e-12);

    VectorXd y(P + 1);
    y.head(P) = basis.from_matrix(MatrixXd::Identity(n2, n2) * c0);
    double min_low = std::numeric_limits<double>::infinity();
    for (const auto& g : low_coeffs) min_low = std::min(min_low, g.dot(y.head(P)));
    y(P) = min_low - 1.0;

    const int m_eff = n2 + K + static_cast<int>(ups.size());
    const int max_iters = std::max(settings.max_newton_iters, 400);

    SdpResult res;
    Eigen::LLT<MatrixXd> llt(n2);

    auto barrier_val = [&](const VectorXd& yy, double t) -> double {
        const MatrixXd S = basis.to_matrix(yy.head(P));
        const double ld = log_det_or_inf(S, llt);
        if (!std::isfinite(ld)) return std::numeric_limits<double>::infinity();
        double phi = -t * yy(P) - ld;
        for (int k = 0; k < K; ++k) {
            const double s = low_coeffs[k].dot(yy.head(P)) - yy(P);
            if (s <= 0.0) return std::numeric_limits<double>::infinity();
            phi -= std::log(s);
        }
        for (size_t l = 0; l < ups.size(); ++l) {
            const double s = caps[l] - up_coeffs[l].dot(yy.head(P));
            if (s <= 0.0) return std::numeric_limits<double>::infinity();
            phi -= std::log(s);
        }
        return phi;
    };

    double t = settings.barrier_t0;
    VectorXd grad(P + 1);
    MatrixXd hess(P + 1, P + 1);

    while (true) {
        int stage_iters = 0;
        for (;;) {
            if (stage_iters >= max_iters) break;  // off-center but usable
            const MatrixXd S = basis.to_matrix(y.head(P));
            llt.compute(S);
            if (llt.info() != Eigen::Success) {
                res.status = SolveStatus::NumericalFailure;
                res.delta0 = y(P);
                res.W = MatrixXcd::Zero(N, N);
                return res;
            }
            const MatrixXd M = llt.solve(MatrixXd::Identity(n2, n2));

            grad.setZero();
            hess.setZero();
            grad(P) = -t;

            // -log det S part.
            for (int a = 0; a < P; ++a) {
                const auto [i, j] = basis.idx[a];
                grad(a) -= (i == j) ? M(i, i) : 2.0 * M(i, j);
            }
            for (int a = 0; a < P; ++a) {
                const auto [i, j] = basis.idx[a];
                for (int b = a; b < P; ++b) {
                    const auto [k, l] = basis.idx[b];
                    // Tr(M D_a M D_b) with D = E_ij (+ E_ji off-diagonal)
                    double h = M(j, k) * M(l, i);
                    if (k != l) h += M(j, l) * M(k, i);
                    if (i != j) {
                        h += M(i, k) * M(l, j);
                        if (k != l) h += M(i, l) * M(k, j);
                    }
                    hess(a, b) += h;
                    if (b != a) hess(b, a) += h;
                }
            }

            // Linear trace constraints.
            for (int k = 0; k < K; ++k) {
                const double s = low_coeffs[k].dot(y.head(P)) - y(P);
                VectorXd gs = VectorXd::Zero(P + 1);
                gs.head(P) = low_coeffs[k];
                gs(P) = -1.0;
                grad -= gs / s;
                hess += (gs * gs.transpose()) / (s * s);
            }
            for (size_t l = 0; l < ups.size(); ++l) {
                const double s = caps[l] - up_coeffs[l].dot(y.head(P));
                VectorXd gs = VectorXd::Zero(P + 1);
                gs.head(P) = -up_coeffs[l];
                grad -= gs / s;
                hess += (gs * gs.transpose()) / (s * s);
            }

            Eigen::LDLT<MatrixXd> ldlt(hess);
            VectorXd step = ldlt.solve(-grad);
            if (!step.allFinite()) {
                res.status = SolveStatus::NumericalFailure;
                res.delta0 = y(P);
                res.W = MatrixXcd::Zero(N, N);
                return res;
            }
            const double decrement2 = -grad.dot(step);
            if (decrement2 * 0.5 < 1e-11) break;

            const double phi0 = barrier_val(y, t);
            double alpha = 1.0;
            while (alpha > 1e-14) {
                if (barrier_val(y + alpha * step, t) <= phi0 - 1e-4 * alpha * decrement2)
                    break;
                alpha *= 0.5;
            }
            ++res.newton_iters;
            ++stage_iters;
            if (alpha <= 1e-14) break;
            y += alpha * step;
        }
        if (static_cast<double>(m_eff) / t < settings.accuracy) break;
        t *= settings.barrier_mu;
    }

    // Recover W by projecting S onto the complex structure.
    const MatrixXd S = basis.to_matrix(y.head(P));
    const MatrixXd A = S.topLeftCorner(N, N);
    const MatrixXd B = S.topRightCorner(N, N);
    const MatrixXd C = S.bottomRightCorner(N, N);
    const MatrixXd X = 0.5 * (A + C);
    const MatrixXd Y = 0.5 * (B.transpose() - B);
    res.W = X.cast<std::complex<double>>() +
            std::complex<double>(0, 1) * Y.cast<std::complex<double>>();
    res.delta0 = y(P);
    res.status = SolveStatus::Optimal;
    return res;
}

}  // namespace mabeam::convex
