// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mabeam/awv_sca.hpp"

using namespace mabeam;

namespace {
constexpr double kPi = 3.14159265358979323846;

Scenario two_beam_scenario() {
    Scenario sc;
    sc.n_antennas = 4;
    sc.aperture = 4.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(40.0), deg_to_rad(110.0)};
    sc.interference_dirs = {deg_to_rad(75.0)};
    return sc;
}

Awv random_awv(int n, std::mt19937_64& rng, double norm = 1.0) {
    std::normal_distribution<double> g;
    VecXcd w(n);
    for (int i = 0; i < n; ++i) w(i) = std::complex<double>(g(rng), g(rng));
    w *= norm / w.norm();
    return Awv{w};
}

Apv random_apv(int n, double aperture, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, aperture);
    VecXd x(n);
    for (int i = 0; i < n; ++i) x(i) = u(rng);
    std::sort(x.data(), x.data() + n);
    return Apv{x};
}

}  // namespace

TEST_CASE("surrogate is tight at the expansion point") {
    std::mt19937_64 rng(21);
    const Scenario sc = two_beam_scenario();
    for (int rep = 0; rep < 100; ++rep) {
        const Apv apv = random_apv(sc.n_antennas, sc.aperture, rng);
        const Awv wt = random_awv(sc.n_antennas, rng);
        const auto sur = build_awv_surrogate(wt, apv, sc);
        REQUIRE(sur.per_signal.size() == sc.signal_dirs.size());
        for (size_t k = 0; k < sur.per_signal.size(); ++k) {
            const double gain = beam_gain(wt, apv, sc.signal_dirs[k]);
            CHECK(std::abs(sur.per_signal[k].value(wt.weights) - gain) < 1e-10);
        }
    }
}

TEST_CASE("surrogate minorizes the gain on random probes") {
    std::mt19937_64 rng(22);
    const Scenario sc = two_beam_scenario();
    std::uniform_real_distribution<double> u(0.1, 1.0);
    const Apv apv = random_apv(sc.n_antennas, sc.aperture, rng);
    const Awv wt = random_awv(sc.n_antennas, rng);
    const auto sur = build_awv_surrogate(wt, apv, sc);
    for (int rep = 0; rep < 1000; ++rep) {
        const Awv w = random_awv(sc.n_antennas, rng, u(rng));
        for (size_t k = 0; k < sur.per_signal.size(); ++k) {
            const double gain = beam_gain(w, apv, sc.signal_dirs[k]);
            CHECK(sur.per_signal[k].value(w.weights) <= gain + 1e-9);
        }
    }
}

TEST_CASE("linear term matches the central-difference gradient of the gain") {
    std::mt19937_64 rng(23);
    const Scenario sc = two_beam_scenario();
    const double h = 1e-5;
    for (int rep = 0; rep < 100; ++rep) {
        const Apv apv = random_apv(sc.n_antennas, sc.aperture, rng);
        const Awv wt = random_awv(sc.n_antennas, rng);
        const auto sur = build_awv_surrogate(wt, apv, sc);
        const size_t k = rep % sur.per_signal.size();
        const VecXcd d = sur.per_signal[k].d;

        for (int n = 0; n < sc.n_antennas; ++n) {
            for (int part = 0; part < 2; ++part) {
                VecXcd wp = wt.weights, wm = wt.weights;
                const std::complex<double> dir =
                    part == 0 ? std::complex<double>(1.0, 0.0)
                              : std::complex<double>(0.0, 1.0);
                wp(n) += h * dir;
                wm(n) -= h * dir;
                const double num =
                    (beam_gain(Awv{wp}, apv, sc.signal_dirs[k]) -
                     beam_gain(Awv{wm}, apv, sc.signal_dirs[k])) /
                    (2.0 * h);
                const double ana = part == 0 ? d(n).real() : d(n).imag();
                const double scale = std::max(1.0, std::abs(num));
                CHECK(std::abs(num - ana) / scale < 1e-5);
            }
        }
    }
}

TEST_CASE("single beam weight optimization recovers the matched filter gain") {
    Scenario sc;
    sc.n_antennas = 6;
    sc.aperture = 4.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(65.0)};

    std::mt19937_64 rng(24);
    Apv apv{VecXd::LinSpaced(sc.n_antennas, 0.0, 2.5)};
    const Awv w0 = random_awv(sc.n_antennas, rng, 0.5);

    const auto res = optimize_awv(apv, w0, sc, convex::SolverSettings{});
    REQUIRE(res.status == convex::SolveStatus::Optimal);
    CHECK(res.awv.norm() <= 1.0 + tol::norm);
    CHECK(min_signal_gain(res.awv, apv, sc) > sc.n_antennas - 1e-2);
}

TEST_CASE("inner trace is non-decreasing and the result stays feasible") {
    std::mt19937_64 rng(25);
    const Scenario sc = two_beam_scenario();
    for (int rep = 0; rep < 20; ++rep) {
        const Apv apv = random_apv(sc.n_antennas, sc.aperture, rng);
        const Awv w0 = random_awv(sc.n_antennas, rng, 0.3);

        const auto res = optimize_awv(apv, w0, sc, convex::SolverSettings{});
        REQUIRE(res.status == convex::SolveStatus::Optimal);
        for (size_t i = 1; i < res.delta_trace.size(); ++i)
            CHECK(res.delta_trace[i] >= res.delta_trace[i - 1] - 1e-8);
        CHECK(res.awv.norm() <= 1.0 + tol::norm);
        const VecXd ig = interference_gains(res.awv, apv, sc);
        for (int l = 0; l < ig.size(); ++l)
            CHECK(ig(l) <= sc.interference_cap + tol::feas);
        // the pass may not lose ground against the start
        CHECK(min_signal_gain(res.awv, apv, sc) >=
              min_signal_gain(w0, apv, sc) - 1e-8);
    }
}
