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

#include "mabeam/apv_sca.hpp"

using namespace mabeam;

namespace {
constexpr double kPi = 3.14159265358979323846;

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

TEST_CASE("scalar cosine bounds sandwich cos and are tight at the base point") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int rep = 0; rep < 10000; ++rep) {
        const double z0 = u(rng);
        const double z = u(rng);
        CHECK(cos_minorizer(z, z0) <= std::cos(z) + 1e-12);
        CHECK(cos_majorizer(z, z0) >= std::cos(z) - 1e-12);
        CHECK(cos_minorizer(z0, z0) == doctest::Approx(std::cos(z0)).epsilon(1e-14));
        CHECK(cos_majorizer(z0, z0) == doctest::Approx(std::cos(z0)).epsilon(1e-14));
    }
}

TEST_CASE("two-antenna curvature matches the closed form") {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 50; ++rep) {
        const Awv w = random_awv(2, rng);
        const Apv x = random_apv(2, 3.0, rng);
        std::uniform_real_distribution<double> ang(1e-2, kPi - 1e-2);
        const double theta = ang(rng);
        const double vartheta = 2.0 * kPi * std::cos(theta);
        const VecXd a = w.amplitudes();

        const auto sur = signal_surrogate(w, x, theta);
        const double k = 2.0 * vartheta * vartheta * a(0) * a(1);
        CHECK(sur.A(0, 0) == doctest::Approx(-k).epsilon(1e-10));
        CHECK(sur.A(1, 1) == doctest::Approx(-k).epsilon(1e-10));
        CHECK(sur.A(0, 1) == doctest::Approx(k).epsilon(1e-10));
        CHECK(sur.A(1, 0) == doctest::Approx(k).epsilon(1e-10));

        const auto sur_i = interference_surrogate(w, x, theta);
        CHECK((sur_i.A + sur.A).norm() < 1e-10);
    }
}

TEST_CASE("surrogates are tight at the expansion point") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> ang(1e-2, kPi - 1e-2);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 2 + int(rng() % 6);
        const Awv w = random_awv(n, rng);
        const Apv x = random_apv(n, 5.0, rng);
        const double theta = ang(rng);

        const auto lo = signal_surrogate(w, x, theta);
        const auto hi = interference_surrogate(w, x, theta);
        const double gain = beam_gain(w, x, theta);
        CHECK(lo.value(x.positions) == doctest::Approx(gain).epsilon(1e-9));
        CHECK(hi.value(x.positions) == doctest::Approx(gain).epsilon(1e-9));
    }
}

TEST_CASE("signal surrogate lower-bounds and interference surrogate upper-bounds") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> ang(1e-2, kPi - 1e-2);
    const int n = 4;
    const Awv w = random_awv(n, rng);
    const Apv x0 = random_apv(n, 5.0, rng);
    const double theta = ang(rng);
    const auto lo = signal_surrogate(w, x0, theta);
    const auto hi = interference_surrogate(w, x0, theta);

    for (int rep = 0; rep < 1000; ++rep) {
        const Apv x = random_apv(n, 5.0, rng);
        const double gain = beam_gain(w, x, theta);
        CHECK(lo.value(x.positions) <= gain + 1e-9);
        CHECK(hi.value(x.positions) >= gain - 1e-9);
    }
}

TEST_CASE("curvature signs hold on random instances") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> ang(1e-2, kPi - 1e-2);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + int(rng() % 7);
        const Awv w = random_awv(n, rng);
        const Apv x = random_apv(n, 6.0, rng);
        const double theta = ang(rng);
        CHECK(convex::eig_check(signal_surrogate(w, x, theta).A,
                                convex::EigKind::NSD)
                  .pass);
        CHECK(convex::eig_check(interference_surrogate(w, x, theta).A,
                                convex::EigKind::PSD)
                  .pass);
    }
}

TEST_CASE("surrogate gradient at the expansion point matches central differences") {
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> ang(1e-2, kPi - 1e-2);
    const double h = 1e-5;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + int(rng() % 5);
        const Awv w = random_awv(n, rng);
        const Apv x = random_apv(n, 5.0, rng);
        const double theta = ang(rng);
        const auto sur = signal_surrogate(w, x, theta);
        const VecXd grad = sur.A * x.positions + sur.b;

        for (int i = 0; i < n; ++i) {
            VecXd xp = x.positions, xm = x.positions;
            xp(i) += h;
            xm(i) -= h;
            const double num =
                (beam_gain(w, Apv{xp}, theta) - beam_gain(w, Apv{xm}, theta)) /
                (2.0 * h);
            const double scale = std::max(1.0, std::abs(num));
            CHECK(std::abs(num - grad(i)) / scale < 1e-5);
        }
    }
}

TEST_CASE("position pass does not lose ground and stays feasible") {
    Scenario sc;
    sc.n_antennas = 4;
    sc.aperture = 6.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(50.0), deg_to_rad(115.0)};
    sc.interference_dirs = {deg_to_rad(85.0)};

    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 10; ++rep) {
        // feasible spread-out start
        VecXd x0 = VecXd::LinSpaced(sc.n_antennas, 0.5, sc.aperture - 0.5);
        for (int i = 0; i < sc.n_antennas; ++i)
            x0(i) += 0.1 * std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        const Apv start{x0};
        REQUIRE(start.is_feasible(sc));
        Awv w = random_awv(sc.n_antennas, rng, 0.3);
        // scale down until the interference caps hold at the start
        while (interference_gains(w, start, sc).maxCoeff() > sc.interference_cap)
            w.weights *= 0.7;

        const auto res = optimize_apv(w, start, sc, convex::SolverSettings{});
        CHECK(res.apv.is_feasible(sc));
        CHECK(min_signal_gain(w, res.apv, sc) >=
              min_signal_gain(w, start, sc) - 1e-8);
        for (size_t i = 1; i < res.delta_trace.size(); ++i)
            CHECK(res.delta_trace[i] >= res.delta_trace[i - 1] - 1e-8);
    }
}
