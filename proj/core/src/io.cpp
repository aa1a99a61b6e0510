// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mabeam/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mabeam::io {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write file: " + path);
    out << text;
}

std::vector<double> to_deg(const std::vector<double>& rad) {
    std::vector<double> out;
    out.reserve(rad.size());
    for (double a : rad) out.push_back(rad_to_deg(a));
    return out;
}

std::vector<double> to_rad(const std::vector<double>& deg) {
    std::vector<double> out;
    out.reserve(deg.size());
    for (double a : deg) out.push_back(deg_to_rad(a));
    return out;
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    Scenario sc;
    sc.n_antennas = j.at("n_antennas").get<int>();
    sc.aperture = j.at("aperture").get<double>();
    sc.min_spacing = j.at("min_spacing").get<double>();
    sc.interference_cap = j.at("interference_cap").get<double>();
    sc.signal_dirs = to_rad(j.at("signal_dirs_deg").get<std::vector<double>>());
    sc.interference_dirs =
        to_rad(j.value("interference_dirs_deg", std::vector<double>{}));
    sc.eps_outer = j.value("eps_outer", 1e-4);
    sc.eps_awv = j.value("eps_awv", 1e-2);
    sc.eps_apv = j.value("eps_apv", 1e-2);
    sc.max_outer = j.value("max_outer", 50);
    sc.max_awv_iters = j.value("max_awv_iters", 100);
    sc.max_apv_iters = j.value("max_apv_iters", 100);
    sc.rng_seed = j.value("rng_seed", std::uint64_t{0});
    sc.validate();
    return sc;
}

std::string scenario_to_json_text(const Scenario& sc) {
    json j;
    j["n_antennas"] = sc.n_antennas;
    j["aperture"] = sc.aperture;
    j["min_spacing"] = sc.min_spacing;
    j["interference_cap"] = sc.interference_cap;
    j["signal_dirs_deg"] = to_deg(sc.signal_dirs);
    j["interference_dirs_deg"] = to_deg(sc.interference_dirs);
    j["eps_outer"] = sc.eps_outer;
    j["eps_awv"] = sc.eps_awv;
    j["eps_apv"] = sc.eps_apv;
    j["max_outer"] = sc.max_outer;
    j["max_awv_iters"] = sc.max_awv_iters;
    j["max_apv_iters"] = sc.max_apv_iters;
    j["rng_seed"] = sc.rng_seed;
    return j.dump(2) + "\n";
}

Scenario load_scenario_json(const std::string& path) {
    return scenario_from_json_text(read_file(path));
}

void save_scenario_json(const Scenario& sc, const std::string& path) {
    write_file(path, scenario_to_json_text(sc));
}

std::string solution_to_json_text(const Solution& sol) {
    json j;
    j["positions"] = std::vector<double>(sol.apv.positions.data(),
                                         sol.apv.positions.data() + sol.apv.size());
    std::vector<double> re, im;
    for (int n = 0; n < sol.awv.size(); ++n) {
        re.push_back(sol.awv.weights(n).real());
        im.push_back(sol.awv.weights(n).imag());
    }
    j["weights_re"] = re;
    j["weights_im"] = im;
    j["delta"] = sol.delta;
    j["signal_gains"] = std::vector<double>(
        sol.signal_gains.data(), sol.signal_gains.data() + sol.signal_gains.size());
    j["interference_gains"] =
        std::vector<double>(sol.interference_gains.data(),
                            sol.interference_gains.data() + sol.interference_gains.size());
    j["outer_trace"] = sol.outer_trace;
    j["wall_time"] = sol.wall_time;
    return j.dump(2) + "\n";
}

Solution solution_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    Solution sol;
    const auto pos = j.at("positions").get<std::vector<double>>();
    sol.apv.positions = Eigen::Map<const VecXd>(pos.data(), pos.size());
    const auto re = j.at("weights_re").get<std::vector<double>>();
    const auto im = j.at("weights_im").get<std::vector<double>>();
    if (re.size() != im.size()) throw std::runtime_error("weight vector size mismatch");
    sol.awv.weights.resize(re.size());
    for (size_t n = 0; n < re.size(); ++n)
        sol.awv.weights(n) = std::complex<double>(re[n], im[n]);
    sol.delta = j.value("delta", 0.0);
    const auto sg = j.value("signal_gains", std::vector<double>{});
    sol.signal_gains = Eigen::Map<const VecXd>(sg.data(), sg.size());
    const auto ig = j.value("interference_gains", std::vector<double>{});
    sol.interference_gains = Eigen::Map<const VecXd>(ig.data(), ig.size());
    sol.outer_trace = j.value("outer_trace", std::vector<double>{});
    sol.wall_time = j.value("wall_time", 0.0);
    return sol;
}

void save_solution_json(const Solution& sol, const std::string& path) {
    write_file(path, solution_to_json_text(sol));
}

Solution load_solution_json(const std::string& path) {
    return solution_from_json_text(read_file(path));
}

void write_pattern_csv(const std::string& path, const Awv& awv, const Apv& apv,
                       double grid_step_deg) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write file: " + path);
    out << "angle_deg,gain,gain_db\n";
    char line[128];
    for (double deg = 0.0; deg <= 180.0 + 1e-9; deg += grid_step_deg) {
        const double gain = beam_gain(awv, apv, deg_to_rad(std::min(deg, 180.0)));
        const double gain_db = 10.0 * std::log10(std::max(gain, 1e-12));
        std::snprintf(line, sizeof(line), "%.6f,%.12g,%.12g\n", deg, gain, gain_db);
        out << line;
    }
}

}  // namespace mabeam::io
