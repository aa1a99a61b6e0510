// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/apv_sca.hpp"

#include <cmath>

namespace mabeam {

using convex::ConcaveQuad;
using convex::ConvexQuadCap;
using convex::MaxMinQcqp;
using convex::SolveStatus;

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
}

WeightAmplitudeProfile::WeightAmplitudeProfile(const Awv& w)
    : amplitudes(w.amplitudes()), phases(w.phases()), gamma(w.amplitudes().sum()) {}

double SurrogateQuadratic::value(const VecXd& x) const {
    return 0.5 * x.dot(A * x) + b.dot(x) + c;
}

double cos_minorizer(double z, double z0) {
    const double dz = z - z0;
    return std::cos(z0) - std::sin(z0) * dz - 0.5 * dz * dz;
}

double cos_majorizer(double z, double z0) {
    const double dz = z - z0;
    return std::cos(z0) - std::sin(z0) * dz + 0.5 * dz * dz;
}

namespace {

// Shared builder: sign = -1 yields the signal-side lower bound, sign = +1
// the interference-side upper bound.
SurrogateQuadratic build_surrogate(const Awv& w, const Apv& x_i, double angle, double sign) {
    const int n = w.size();
    const WeightAmplitudeProfile prof(w);
    const double freq = kTwoPi * std::cos(angle);  // spatial frequency
    const VecXd& amp = prof.amplitudes;
    const VecXd& ph = prof.phases;
    const VecXd& xi = x_i.positions;

    SurrogateQuadratic s;
    s.expansion_point = xi;
    s.A = sign * 2.0 * freq * freq *
          (prof.gamma * MatXd(amp.asDiagonal()) - amp * amp.transpose());
    s.b = VecXd::Zero(n);
    s.c = 0.0;

    for (int p = 0; p < n; ++p) {
        for (int m = 0; m < n; ++m) {
            const double wpm = amp(p) * amp(m);
            const double dx = xi(p) - xi(m);
            const double f0 = freq * dx - (ph(p) - ph(m));
            s.b(p) += -sign * 2.0 * freq * freq * wpm * dx - 2.0 * freq * wpm * std::sin(f0);
            s.c += wpm * (std::cos(f0) + freq * std::sin(f0) * dx +
                          sign * 0.5 * freq * freq * dx * dx);
        }
    }
    return s;
}

}  // namespace

SurrogateQuadratic signal_surrogate(const Awv& w, const Apv& x_i, double theta_k) {
    SurrogateQuadratic s = build_surrogate(w, x_i, theta_k, -1.0);
    s.is_signal = true;
    return s;
}

SurrogateQuadratic interference_surrogate(const Awv& w, const Apv& x_i, double phi_l) {
    SurrogateQuadratic s = build_surrogate(w, x_i, phi_l, +1.0);
    s.is_signal = false;
    return s;
}

ApvOptResult optimize_apv(const Awv& w, const Apv& x_init, const Scenario& sc,
                          const convex::SolverSettings& settings) {
    const int n = sc.n_antennas;
    const double eta = std::max(sc.interference_cap, 1e-9);

    ApvOptResult res;
    res.apv = x_init;
    double current_gain = min_signal_gain(w, res.apv, sc);

    // Box and spacing constraints: -x_1 <= 0, x_N <= D, x_{m-1} - x_m <= -D0.
    MatXd G(n + 1, n);
    VecXd h(n + 1);
    G.setZero();
    G(0, 0) = -1.0;
    h(0) = 0.0;
    G(1, n - 1) = 1.0;
    h(1) = sc.aperture;
    for (int m = 1; m < n; ++m) {
        G(m + 1, m - 1) = 1.0;
        G(m + 1, m) = -1.0;
        h(m + 1) = -sc.min_spacing;
    }
    if (n == 1) {
        G.conservativeResize(2, n);
        h.conservativeResize(2);
    }

    MaxMinQcqp prob;
    prob.dim = n;
    prob.lin_G = G;
    prob.lin_h = h;

    for (int i = 0; i < sc.max_apv_iters; ++i) {
        prob.lower_quads.clear();
        prob.upper_quads.clear();
        for (int k = 0; k < sc.num_signal(); ++k) {
            const SurrogateQuadratic s = signal_surrogate(w, res.apv, sc.signal_dirs[k]);
            ConcaveQuad q;
            q.A = s.A;
            q.b = s.b;
            q.c = s.c;
            prob.lower_quads.push_back(std::move(q));
        }
        for (int l = 0; l < sc.num_interference(); ++l) {
            const SurrogateQuadratic s =
                interference_surrogate(w, res.apv, sc.interference_dirs[l]);
            ConvexQuadCap p;
            p.A = s.A;
            p.b = s.b;
            p.c = s.c;
            p.cap = eta;
            prob.upper_quads.push_back(std::move(p));
        }

        const auto sol = convex::solve_maxmin_qcqp(prob, settings, res.apv.positions);
        if (sol.status == SolveStatus::Infeasible) {
            // The current x satisfies the signal surrogates with the current
            // gain, so infeasibility can only come from numerically tight
            // interference surrogates; keep the position and stop.
            res.stalled = true;
            break;
        }
        if (sol.status != SolveStatus::Optimal) {
            res.status = sol.status;
            break;
        }

        Apv candidate{sol.v};
        const double cand_gain = min_signal_gain(w, candidate, sc);
        if (cand_gain < current_gain - 1e-9) {
            res.stalled = true;
            break;
        }
        res.apv = std::move(candidate);
        current_gain = cand_gain;
        res.delta_trace.push_back(sol.delta);
        if (res.delta_trace.size() >= 2) {
            const auto sz = res.delta_trace.size();
            if (res.delta_trace[sz - 1] - res.delta_trace[sz - 2] < sc.eps_apv) break;
        }
    }

    return res;
}

}  // namespace mabeam
