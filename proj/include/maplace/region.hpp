// SPDX-License-Identifier: Apache-2.0
//
// maplace: movable-antenna placement for robust angle-of-departure estimation
// Copyright (C) 2026 The maplace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include "maplace/model.hpp"

namespace maplace {

/// Level at which the main lobe is cut.
enum class HalfPowerCriterion {
    power,     // |SCC|^2 = 1/2
    amplitude, // |SCC| = 1/2
};

/*!
 * Discretized AoD uncertainty region P with its center and ambiguity threshold.
 *
 * Angles are an ascending grid min, min + step, ..., with max appended when the span is not a
 * multiple of the step. The main-lobe beamwidth is measured on its own fine grid.
 */
struct UncertaintyRegion {
    std::vector<Angle> angles;
    Angle center;
    double grid_step_deg = 0.1;
    double kappa_scc = 0.5;
    double beamwidth_step_deg = 0.01;
    HalfPowerCriterion half_power = HalfPowerCriterion::amplitude;

    /// Throws ConfigError on an inverted range, center outside the range, or bad step/threshold.
    static UncertaintyRegion from_bounds(double min_deg, double max_deg, double center_deg, double step_deg = 0.1,
                                         double kappa_scc = 0.5);

    /// Region of total span span_deg centered on center_deg.
    static UncertaintyRegion centered(double center_deg, double span_deg, double step_deg = 0.1,
                                      double kappa_scc = 0.5);

    double min_deg() const { return angles.front().deg(); }
    double max_deg() const { return angles.back().deg(); }
    double span_deg() const { return max_deg() - min_deg(); }
};

} // namespace maplace
