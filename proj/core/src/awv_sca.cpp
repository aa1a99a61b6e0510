// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/awv_sca.hpp"

#include <cmath>

#include "mabeam/sdp.hpp"  // realify_hermitian

namespace mabeam {

using convex::ConcaveQuad;
using convex::ConvexQuadCap;
using convex::MaxMinQcqp;
using convex::SolveStatus;

namespace {

VecXd realify(const VecXcd& w) {
    VecXd v(2 * w.size());
    v.head(w.size()) = w.real();
    v.tail(w.size()) = w.imag();
    return v;
}

VecXcd complexify(const VecXd& v) {
    const Eigen::Index n = v.size() / 2;
    return v.head(n) + std::complex<double>(0, 1) * v.tail(n);
}

}  // namespace

double AwvLinearFunctional::value(const VecXcd& w) const {
    return (d.dot(w)).real() + offset;  // d.dot(w) = d^H w
}

AwvLinearSurrogate build_awv_surrogate(const Awv& w_t, const Apv& apv, const Scenario& sc) {
    AwvLinearSurrogate s;
    s.per_signal.reserve(sc.num_signal());
    for (double theta : sc.signal_dirs) {
        const VecXcd alpha = steering_vector(apv, theta);
        AwvLinearFunctional f;
        f.d = 2.0 * alpha * alpha.dot(w_t.weights);  // 2 alpha (alpha^H w_t)
        f.offset = -beam_gain(w_t, apv, theta);
        s.per_signal.push_back(std::move(f));
    }
    return s;
}

AwvOptResult optimize_awv(const Apv& apv, const Awv& w_init, const Scenario& sc,
                          const convex::SolverSettings& settings) {
    const int n = sc.n_antennas;
    const double eta = std::max(sc.interference_cap, 1e-9);

    AwvOptResult res;
    Awv w = w_init;

    // Repair a start that violates the norm budget or interference cap;
    // scaling w down scales every gain down.
    for (int guard = 0; guard < 10000; ++guard) {
        bool ok = w.weights.squaredNorm() <= 1.0;
        for (int l = 0; ok && l < sc.num_interference(); ++l)
            ok = beam_gain(w, apv, sc.interference_dirs[l]) <= eta;
        if (ok) break;
        w.weights *= 0.99;
    }

    // Fixed convex constraints on w: interference caps and the norm budget.
    MaxMinQcqp prob;
    prob.dim = 2 * n;
    for (double phi : sc.interference_dirs) {
        const VecXcd alpha = steering_vector(apv, phi);
        ConvexQuadCap p;
        p.A = 2.0 * convex::realify_hermitian(alpha * alpha.adjoint());
        p.b = VecXd::Zero(2 * n);
        p.cap = eta;
        prob.upper_quads.push_back(std::move(p));
    }
    {
        ConvexQuadCap norm_budget;
        norm_budget.A = 2.0 * MatXd::Identity(2 * n, 2 * n);
        norm_budget.b = VecXd::Zero(2 * n);
        norm_budget.cap = 1.0;
        prob.upper_quads.push_back(std::move(norm_budget));
    }
    prob.lin_G = MatXd::Zero(0, 2 * n);
    prob.lin_h = VecXd::Zero(0);

    for (int t = 0; t < sc.max_awv_iters; ++t) {
        const AwvLinearSurrogate surr = build_awv_surrogate(w, apv, sc);
        prob.lower_quads.clear();
        for (const auto& f : surr.per_signal) {
            ConcaveQuad q;
            q.b = realify(f.d);
            q.c = f.offset;
            prob.lower_quads.push_back(std::move(q));
        }

        const auto sol = convex::solve_maxmin_qcqp(prob, settings, realify(w.weights));
        if (sol.status != SolveStatus::Optimal) {
            res.status = sol.status;
            break;
        }
        w.weights = complexify(sol.v);
        res.delta_trace.push_back(sol.delta);
        if (res.delta_trace.size() >= 2) {
            const auto sz = res.delta_trace.size();
            if (res.delta_trace[sz - 1] - res.delta_trace[sz - 2] < sc.eps_awv) break;
        }
    }

    res.awv = std::move(w);
    return res;
}

}  // namespace mabeam
