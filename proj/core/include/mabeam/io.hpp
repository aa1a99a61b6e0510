// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_IO_HPP
#define MABEAM_IO_HPP

#include <stdexcept>
#include <string>

#include "mabeam/array.hpp"

namespace mabeam::io {

// Unreadable or unwritable user-supplied file path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario files are JSON with angles in degrees and lengths in wavelengths.
Scenario load_scenario_json(const std::string& path);
void save_scenario_json(const Scenario& sc, const std::string& path);
Scenario scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const Scenario& sc);

std::string solution_to_json_text(const Solution& sol);
Solution solution_from_json_text(const std::string& text);
void save_solution_json(const Solution& sol, const std::string& path);
Solution load_solution_json(const std::string& path);

// angle_deg,gain,gain_db rows over [0, 180] with the given step.
void write_pattern_csv(const std::string& path, const Awv& awv, const Apv& apv,
                       double grid_step_deg);

}  // namespace mabeam::io

#endif
