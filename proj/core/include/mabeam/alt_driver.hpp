// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_ALT_DRIVER_HPP
#define MABEAM_ALT_DRIVER_HPP

#include <optional>
#include <vector>

#include "mabeam/array.hpp"
#include "mabeam/qcqp.hpp"

namespace mabeam {

struct RunReport {
    Solution solution;
    int outer_iterations = 0;
    std::vector<int> awv_inner_counts;   // SCA iterations per outer pass
    std::vector<int> apv_inner_counts;
    std::vector<double> awv_stage_delta; // min gain after each weight pass
    std::vector<double> apv_stage_delta; // min gain after each position pass
    int stall_events = 0;
    convex::SolveStatus status = convex::SolveStatus::Optimal;
};

// Full alternating optimization: weight pass, position pass, outer
// convergence on the recomputed min signal gain. If no starting point is
// given the spectral initializer supplies one.
RunReport alternating_optimize(const Scenario& sc,
                               const std::optional<std::pair<Apv, Awv>>& init,
                               const convex::SolverSettings& settings,
                               int max_outer_override = -1);

// Production entry point. Runs the alternation from the spectral start; when
// the interference caps left active by the weight pass pin the position pass
// at the start (a coordinate-wise optimum), restarts once from the discrete
// grid-search point and keeps the better run.
RunReport joint_optimize(const Scenario& sc, const convex::SolverSettings& settings);

struct ComplexityRow {
    int n_antennas;
    int n_signal;
    int n_interference;
    double seconds;
    int outer_iterations;
    int total_inner_iterations;
};

// Empirical scaling probe over antenna counts and direction counts.
std::vector<ComplexityRow> complexity_probe(const std::vector<int>& antenna_counts,
                                            const std::vector<int>& interference_counts,
                                            std::uint64_t seed);

}  // namespace mabeam

#endif
