// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/array.hpp"

#include <cmath>

namespace mabeam {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
}

bool Apv::is_feasible(const Scenario& sc, double slack) const {
    if (size() != sc.n_antennas) return false;
    if (positions(0) < -slack) return false;
    if (positions(size() - 1) > sc.aperture + slack) return false;
    for (int n = 1; n < size(); ++n)
        if (positions(n) - positions(n - 1) < sc.min_spacing - slack) return false;
    return true;
}

VecXd Awv::phases() const {
    VecXd ph(weights.size());
    for (Eigen::Index n = 0; n < weights.size(); ++n) ph(n) = std::arg(weights(n));
    return ph;
}

VecXcd steering_vector(const Apv& apv, double theta) {
    const double freq = kTwoPi * std::cos(theta);
    VecXcd alpha(apv.size());
    for (int n = 0; n < apv.size(); ++n)
        alpha(n) = std::polar(1.0, freq * apv.positions(n));
    return alpha;
}

double beam_gain(const Awv& awv, const Apv& apv, double theta) {
    const std::complex<double> response = awv.weights.dot(steering_vector(apv, theta));
    return std::norm(response);
}

std::vector<std::pair<double, double>> beam_pattern(const Awv& awv, const Apv& apv,
                                                    const std::vector<double>& grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(grid.size());
    for (double theta : grid) out.emplace_back(theta, beam_gain(awv, apv, theta));
    return out;
}

VecXd signal_gains(const Awv& awv, const Apv& apv, const Scenario& sc) {
    VecXd g(sc.num_signal());
    for (int k = 0; k < sc.num_signal(); ++k)
        g(k) = beam_gain(awv, apv, sc.signal_dirs[k]);
    return g;
}

VecXd interference_gains(const Awv& awv, const Apv& apv, const Scenario& sc) {
    VecXd g(sc.num_interference());
    for (int l = 0; l < sc.num_interference(); ++l)
        g(l) = beam_gain(awv, apv, sc.interference_dirs[l]);
    return g;
}

double min_signal_gain(const Awv& awv, const Apv& apv, const Scenario& sc) {
    return signal_gains(awv, apv, sc).minCoeff();
}

FeasibilityReport validate_solution(const Solution& sol, const Scenario& sc) {
    FeasibilityReport report;
    const VecXd& x = sol.apv.positions;
    const int n = sol.apv.size();

    if (n != sc.n_antennas) {
        report.violations.push_back({"dimension", double(std::abs(n - sc.n_antennas))});
        return report;
    }
    if (x(0) < -tol::feas)
        report.violations.push_back({"box_lower", -x(0)});
    if (x(n - 1) > sc.aperture + tol::feas)
        report.violations.push_back({"box_upper", x(n - 1) - sc.aperture});
    for (int i = 1; i < n; ++i) {
        const double gap = x(i) - x(i - 1);
        if (gap < sc.min_spacing - tol::feas)
            report.violations.push_back({"spacing[" + std::to_string(i) + "]",
                                         sc.min_spacing - gap});
    }
    const double wnorm = sol.awv.norm();
    if (wnorm > 1.0 + tol::norm)
        report.violations.push_back({"weight_norm", wnorm - 1.0});
    for (int l = 0; l < sc.num_interference(); ++l) {
        const double g = beam_gain(sol.awv, sol.apv, sc.interference_dirs[l]);
        if (g > sc.interference_cap + tol::feas)
            report.violations.push_back({"interference[" + std::to_string(l) + "]",
                                         g - sc.interference_cap});
    }
    return report;
}

}  // namespace mabeam
