// SPDX-License-Identifier: Apache-2.0
//
// mabeam - multi-beam forming with a linear movable-antenna array
// Copyright (C) 2026 the mabeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef MABEAM_BASELINES_HPP
#define MABEAM_BASELINES_HPP

#include "mabeam/alt_driver.hpp"
#include "mabeam/array.hpp"

namespace mabeam {

// Half-wavelength ULA with the SDP-derived optimal weights; no position
// optimization.
Solution fpa_baseline(const Scenario& sc, const convex::SolverSettings& settings);

// Alternating optimization with the position block replaced by sequential
// exhaustive search over the half-wavelength grid.
Solution aps_baseline(const Scenario& sc, const convex::SolverSettings& settings);

// A single weight pass and a single position pass, no outer iterations.
Solution awi_baseline(const Scenario& sc, const convex::SolverSettings& settings);

}  // namespace mabeam

#endif
