// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <CLI11.hpp>
#include <json.hpp>
#include <cstdio>
#include <filesystem>
#include <string>

#include "mabeam/experiment.hpp"
#include "mabeam/io.hpp"

namespace {

struct CommonOverrides {
    double eta = -1.0;
    double epsilon = -1.0;
    int max_outer = -1;
    bool quiet = false;

    void apply(mabeam::Scenario& sc) const {
        if (eta >= 0.0) sc.interference_cap = eta;
        if (epsilon > 0.0) sc.eps_outer = epsilon;
        if (max_outer > 0) sc.max_outer = max_outer;
    }
};

void add_overrides(CLI::App* cmd, CommonOverrides& ov) {
    cmd->add_option("--eta", ov.eta, "Override the interference cap");
    cmd->add_option("--epsilon", ov.epsilon, "Override the outer convergence threshold");
    cmd->add_option("--max-outer", ov.max_outer, "Override the outer iteration cap");
    cmd->add_flag("--quiet", ov.quiet, "Suppress progress logs");
}

int run_solve(const std::string& scenario_path, const std::string& out_dir,
              const CommonOverrides& ov) {
    mabeam::Scenario sc = mabeam::io::load_scenario_json(scenario_path);
    ov.apply(sc);
    sc.validate();

    const mabeam::convex::SolverSettings settings;
    const mabeam::RunReport report = mabeam::joint_optimize(sc, settings);
    if (report.status != mabeam::convex::SolveStatus::Optimal) {
        std::fprintf(stderr, "solver failure during alternating optimization\n");
        return 1;
    }

    std::filesystem::create_directories(out_dir);
    mabeam::io::save_solution_json(report.solution, out_dir + "/solution.json");
    mabeam::io::write_pattern_csv(out_dir + "/pattern.csv", report.solution.awv,
                                  report.solution.apv, 0.5);
    if (!ov.quiet)
        std::printf("max-min gain %.6f after %d outer iterations -> %s\n",
                    report.solution.delta, report.outer_iterations, out_dir.c_str());
    return 0;
}

int run_benchmark(const std::string& experiment, int trials, std::uint64_t seed,
                  const std::string& out_dir, const CommonOverrides& ov) {
    mabeam::ExperimentSpec spec;
    if (experiment == "fig2")
        spec = mabeam::make_fig2_spec();
    else if (experiment == "fig3")
        spec = mabeam::make_fig3_spec();
    else if (experiment == "fig4")
        spec = mabeam::make_fig4_spec();
    else {
        std::fprintf(stderr, "unknown experiment: %s\n", experiment.c_str());
        return 2;
    }
    if (trials > 0) spec.trials = trials;
    spec.seed = seed;
    spec.out_dir = out_dir;
    spec.quiet = ov.quiet;
    ov.apply(spec.base);

    const mabeam::convex::SolverSettings settings;
    const mabeam::ResultTable table = mabeam::run_experiment(spec, settings);

    int failures = 0;
    for (const auto& row : table.rows)
        if (!row.ok) ++failures;
    if (!ov.quiet)
        std::printf("%zu result rows (%d failed trials) -> %s/results.csv\n",
                    table.rows.size(), failures, out_dir.c_str());
    return 0;
}

int run_pattern(const std::string& scenario_path, const std::string& solution_path,
                double grid_deg, const std::string& out_path) {
    const mabeam::Scenario sc = mabeam::io::load_scenario_json(scenario_path);
    const mabeam::Solution sol = mabeam::io::load_solution_json(solution_path);
    if (sol.apv.size() != sc.n_antennas) {
        std::fprintf(stderr, "solution does not match scenario dimension\n");
        return 2;
    }
    mabeam::io::write_pattern_csv(out_path, sol.awv, sol.apv, grid_deg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-beam forming optimization for linear movable-antenna arrays"};
    app.require_subcommand(1);

    std::string scenario_path, solution_path, out_dir = "out", experiment = "fig2";
    std::string pattern_out = "pattern.csv";
    int trials = -1;
    std::uint64_t seed = 0;
    double grid_deg = 0.5;
    CommonOverrides ov;

    auto* solve = app.add_subcommand("solve", "Optimize one scenario");
    solve->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    solve->add_option("--out", out_dir, "Output directory");
    add_overrides(solve, ov);

    auto* bench = app.add_subcommand("benchmark", "Run a benchmark experiment");
    bench->add_option("--experiment", experiment, "fig2|fig3|fig4")->required();
    bench->add_option("--trials", trials, "Trials per sweep point");
    bench->add_option("--seed", seed, "Base RNG seed");
    bench->add_option("--out", out_dir, "Output directory");
    add_overrides(bench, ov);

    auto* pattern = app.add_subcommand("pattern", "Emit a beam-pattern CSV");
    pattern->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    pattern->add_option("--solution", solution_path, "Solution JSON file")->required();
    pattern->add_option("--grid-deg", grid_deg, "Angular grid step in degrees");
    pattern->add_option("--out", pattern_out, "Output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(scenario_path, out_dir, ov);
        if (bench->parsed()) return run_benchmark(experiment, trials, seed, out_dir, ov);
        if (pattern->parsed())
            return run_pattern(scenario_path, solution_path, grid_deg, pattern_out);
    } catch (const mabeam::io::IoError& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const mabeam::ScenarioError& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
