// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Brute-force grid oracle for small max-min QCQP instances over the box
// [-1, 1]^d. Refines around several of the best feasible grid points per
// level; a single window can lose the optimum when the objective is nearly
// flat along a constraint boundary.

#ifndef MABEAM_TESTS_ORACLE_GRID_HPP
#define MABEAM_TESTS_ORACLE_GRID_HPP

#include <algorithm>
#include <limits>
#include <vector>

#include "mabeam/qcqp.hpp"

namespace mabeam_test {

inline double grid_oracle(const mabeam::convex::MaxMinQcqp& prob, int levels = 6,
                          int pts = 31, int max_centers = 4) {
    using Eigen::VectorXd;
    const int d = prob.dim;

    struct Cand {
        VectorXd v;
        double val;
    };

    auto objective = [&](const VectorXd& v) -> double {
        for (const auto& p : prob.upper_quads)
            if (p.value(v) > p.cap + 1e-12)
                return -std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < prob.lin_G.rows(); ++r)
            if (prob.lin_G.row(r).dot(v) > prob.lin_h(r) + 1e-12)
                return -std::numeric_limits<double>::infinity();
        double val = std::numeric_limits<double>::infinity();
        for (const auto& q : prob.lower_quads) val = std::min(val, q.value(v));
        return val;
    };

    std::vector<VectorXd> centers = {VectorXd::Zero(d)};
    double half_width = 1.0;
    double best = -std::numeric_limits<double>::infinity();

    for (int level = 0; level < levels; ++level) {
        const double step = 2.0 * half_width / (pts - 1);
        std::vector<Cand> pool;
        for (const VectorXd& center : centers) {
            std::vector<int> idx(d, 0);
            bool carry = false;
            while (!carry) {
                VectorXd v(d);
                for (int i = 0; i < d; ++i)
                    v(i) = std::clamp(center(i) - half_width + idx[i] * step, -1.0, 1.0);
                const double val = objective(v);
                if (val > -std::numeric_limits<double>::infinity())
                    pool.push_back({v, val});
                int i = 0;
                for (; i < d; ++i) {
                    if (++idx[i] < pts) break;
                    idx[i] = 0;
                }
                carry = (i == d);
            }
        }
        if (pool.empty()) break;
        std::sort(pool.begin(), pool.end(),
                  [](const Cand& a, const Cand& b) { return a.val > b.val; });
        best = std::max(best, pool.front().val);

        // spatially diverse refinement centers
        centers.clear();
        for (const Cand& c : pool) {
            bool close = false;
            for (const VectorXd& s : centers)
                if ((c.v - s).lpNorm<Eigen::Infinity>() < 2.0 * step) close = true;
            if (!close) centers.push_back(c.v);
            if (static_cast<int>(centers.size()) >= max_centers) break;
        }
        half_width = 2.0 * step;
    }
    return best;
}

}  // namespace mabeam_test

#endif
