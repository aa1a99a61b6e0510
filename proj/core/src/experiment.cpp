// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "mabeam/io.hpp"

namespace mabeam {

void ExperimentSpec::validate() const {
    if (id == ExperimentId::SweepN) {
        for (int n : sweep_values)
            if ((n - 1) * base.min_spacing > base.aperture)
                throw ScenarioError("sweep N value does not fit the aperture");
    }
    if (id == ExperimentId::SweepL) {
        for (int l : sweep_values)
            if (l < 0) throw ScenarioError("negative interference count");
    }
    if (trials < 1) throw ScenarioError("trials must be >= 1");
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t point, std::uint64_t trial) {
    // splitmix64 over the packed inputs
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (point + 1) +
                      0xBF58476D1CE4E5B9ull * (trial + 1);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

double ResultTable::mean_gain(const std::string& scheme, double sweep_value) const {
    double sum = 0.0;
    int count = 0;
    for (const auto& row : rows) {
        if (row.scheme == scheme && row.sweep_value == sweep_value && row.ok) {
            sum += row.maxmin_gain;
            ++count;
        }
    }
    return count > 0 ? sum / count : 0.0;
}

std::string ResultTable::to_csv() const {
    std::string out = "scheme,sweep_value,trial,maxmin_gain,interference_max,runtime_s,status\n";
    char line[256];
    for (const auto& row : rows) {
        const std::string status = row.ok ? "ok" : "error:" + row.error;
        std::snprintf(line, sizeof(line), "%s,%.12g,%d,%.12g,%.12g,%.6f,%s\n",
                      row.scheme.c_str(), row.sweep_value, row.trial, row.maxmin_gain,
                      row.interference_max, row.runtime, status.c_str());
        out += line;
    }
    return out;
}

namespace {

int thread_cap() {
    if (const char* env = std::getenv("MA_BEAMOPT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 4;
}

struct Task {
    Scenario sc;
    double sweep_value;
    int trial;
};

ResultRow run_scheme(const char* name, const Scenario& sc,
                     const convex::SolverSettings& settings, double sweep_value,
                     int trial) {
    ResultRow row;
    row.scheme = name;
    row.sweep_value = sweep_value;
    row.trial = trial;
    try {
        Solution sol;
        const std::string scheme(name);
        if (scheme == "proposed")
            sol = joint_optimize(sc, settings).solution;
        else if (scheme == "fpa")
            sol = fpa_baseline(sc, settings);
        else if (scheme == "aps")
            sol = aps_baseline(sc, settings);
        else
            sol = awi_baseline(sc, settings);

        const FeasibilityReport rep = validate_solution(sol, sc);
        if (!rep.feasible()) {
            row.ok = false;
            row.error = "infeasible:" + rep.violations.front().constraint;
            return row;
        }
        row.maxmin_gain = sol.delta;
        row.interference_max =
            sol.interference_gains.size() > 0 ? sol.interference_gains.maxCoeff() : 0.0;
        row.runtime = sol.wall_time;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

const char* kSchemes[] = {"proposed", "fpa", "aps", "awi"};

}  // namespace

ResultTable run_experiment(const ExperimentSpec& spec,
                           const convex::SolverSettings& settings) {
    spec.validate();
    std::vector<Task> tasks;

    if (spec.id == ExperimentId::Pattern || spec.id == ExperimentId::Single) {
        spec.base.validate();
        tasks.push_back({spec.base, static_cast<double>(spec.base.n_antennas), 0});
    } else {
        for (size_t p = 0; p < spec.sweep_values.size(); ++p) {
            for (int trial = 0; trial < spec.trials; ++trial) {
                Scenario sc = spec.base;
                if (spec.id == ExperimentId::SweepN)
                    sc.n_antennas = spec.sweep_values[p];
                const int k = std::max(sc.num_signal(), 2);
                const int l = spec.id == ExperimentId::SweepL
                                  ? spec.sweep_values[p]
                                  : std::max(sc.num_interference(), 2);
                sc.rng_seed = mix_seed(spec.seed, p, trial);
                draw_random_directions(k, l, sc.rng_seed, sc.signal_dirs,
                                       sc.interference_dirs);
                tasks.push_back({std::move(sc), static_cast<double>(spec.sweep_values[p]),
                                 trial});
            }
        }
    }

    const bool run_baselines = spec.id != ExperimentId::Single;
    const int schemes_per_task = run_baselines ? 4 : 1;
    std::vector<ResultRow> rows(tasks.size() * schemes_per_task);

    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            for (int s = 0; s < schemes_per_task; ++s)
                rows[i * schemes_per_task + s] =
                    run_scheme(kSchemes[s], task.sc, settings, task.sweep_value, task.trial);
            const size_t d = done.fetch_add(1) + 1;
            if (!spec.quiet)
                std::fprintf(stderr, "\r[mabeam] %zu/%zu trials done", d, tasks.size());
        }
    };

    const int n_threads = std::min<int>(thread_cap(), static_cast<int>(tasks.size()));
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads - 1; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (!spec.quiet) std::fprintf(stderr, "\n");

    ResultTable table;
    table.rows = std::move(rows);

    if (!spec.out_dir.empty()) {
        std::filesystem::create_directories(spec.out_dir);
        std::ofstream csv(spec.out_dir + "/results.csv");
        csv << table.to_csv();

        if (spec.id == ExperimentId::Pattern) {
            // One beam-pattern file per scheme for the fixed scenario.
            const Scenario& sc = tasks.front().sc;
            for (int s = 0; s < schemes_per_task; ++s) {
                const std::string scheme = kSchemes[s];
                try {
                    Solution sol;
                    if (scheme == "proposed")
                        sol = joint_optimize(sc, settings).solution;
                    else if (scheme == "fpa")
                        sol = fpa_baseline(sc, settings);
                    else if (scheme == "aps")
                        sol = aps_baseline(sc, settings);
                    else
                        sol = awi_baseline(sc, settings);
                    io::write_pattern_csv(spec.out_dir + "/pattern_" + scheme + ".csv",
                                          sol.awv, sol.apv, spec.pattern_grid_deg);
                } catch (const std::exception&) {
                    // already recorded in the table
                }
            }
        }
    }
    return table;
}

ExperimentSpec make_fig2_spec() {
    ExperimentSpec spec;
    spec.id = ExperimentId::Pattern;
    spec.trials = 1;
    Scenario& sc = spec.base;
    sc.n_antennas = 8;
    sc.aperture = 8.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(30.0), deg_to_rad(120.0)};
    sc.interference_dirs = {deg_to_rad(10.0), deg_to_rad(150.0)};
    return spec;
}

ExperimentSpec make_fig3_spec() {
    ExperimentSpec spec;
    spec.id = ExperimentId::SweepN;
    spec.sweep_values = {4, 6, 8, 10};
    spec.trials = 50;
    Scenario& sc = spec.base;
    sc.n_antennas = 4;
    sc.aperture = 10.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(30.0), deg_to_rad(120.0)};   // placeholders, redrawn
    sc.interference_dirs = {deg_to_rad(10.0), deg_to_rad(150.0)};
    return spec;
}

ExperimentSpec make_fig4_spec() {
    ExperimentSpec spec;
    spec.id = ExperimentId::SweepL;
    spec.sweep_values = {1, 2, 3, 4, 5, 6};
    spec.trials = 50;
    Scenario& sc = spec.base;
    sc.n_antennas = 8;
    sc.aperture = 8.0;
    sc.min_spacing = 0.5;
    sc.interference_cap = 0.1;
    sc.signal_dirs = {deg_to_rad(30.0), deg_to_rad(120.0)};
    sc.interference_dirs = {deg_to_rad(10.0)};
    return spec;
}

}  // namespace mabeam
