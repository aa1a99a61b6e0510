// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_EXPERIMENT_HPP
#define MABEAM_EXPERIMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "mabeam/baselines.hpp"

namespace mabeam {

enum class ExperimentId { Pattern, SweepN, SweepL, Single };

struct ExperimentSpec {
    ExperimentId id = ExperimentId::Single;
    Scenario base;
    std::vector<int> sweep_values;  // N values or L values
    int trials = 50;
    std::uint64_t seed = 0;
    std::string out_dir;            // empty: no files written
    double pattern_grid_deg = 0.5;
    bool quiet = false;

    void validate() const;
};

struct ResultRow {
    std::string scheme;     // proposed | fpa | aps | awi
    double sweep_value = 0.0;
    int trial = 0;
    double maxmin_gain = 0.0;
    double interference_max = 0.0;
    double runtime = 0.0;   // seconds
    bool ok = true;
    std::string error;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    // mean max-min gain per scheme at one sweep value, failed trials skipped
    double mean_gain(const std::string& scheme, double sweep_value) const;
    std::string to_csv() const;
};

// Runs the proposed method and the three baselines over the experiment
// grid. Trials run concurrently (capped by MA_BEAMOPT_THREADS); rows come
// back in deterministic (point, trial, scheme) order.
ResultTable run_experiment(const ExperimentSpec& spec,
                           const convex::SolverSettings& settings);

ExperimentSpec make_fig2_spec();
ExperimentSpec make_fig3_spec();
ExperimentSpec make_fig4_spec();

// Deterministic per-trial seed derivation.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t point, std::uint64_t trial);

}  // namespace mabeam

#endif
