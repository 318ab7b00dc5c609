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
#include "maplace/region.hpp"

namespace maplace {

/// |SCC(theta_i, theta_j, r)| = |a^H(theta_i) a(theta_j)| / L, in [0, 1]. Valid for |theta| <= 90 deg.
double scc(Angle theta_i, Angle theta_j, std::span<const double> positions, const ScenarioConfig& cfg);

struct Beamwidth {
    double width_deg = 0.0;
    // response never fell below the half-power level inside +/-90 deg; width is the full domain
    bool full_domain = false;

    friend bool operator==(const Beamwidth&, const Beamwidth&) = default;
};

/*!
 * Half-power beamwidth around theta_c.
 *
 * Scans outward from theta_c in steps of fine_step_deg until the response crosses the
 * half-power level on each side, then linearly interpolates the crossing. The level is
 * |SCC|^2 = 1/2 for the power criterion and |SCC| = 1/2 for the amplitude criterion.
 */
Beamwidth half_power_beamwidth(std::span<const double> positions, Angle theta_c, double fine_step_deg,
                               const ScenarioConfig& cfg,
                               HalfPowerCriterion criterion = HalfPowerCriterion::amplitude);

/// Region angles with |theta - theta_c| < beamwidth / 2.
std::vector<Angle> mainlobe_set(const Beamwidth& bw, const UncertaintyRegion& region);
std::vector<Angle> mainlobe_set(std::span<const double> positions, const UncertaintyRegion& region,
                                const ScenarioConfig& cfg);

struct SccCheck {
    bool feasible = true;
    double max_sidelobe = 0.0; // max |SCC(theta_c, theta)| over P minus the main lobe, 0 when that set is empty
    Beamwidth beamwidth;
};

/// Ambiguity constraint: max over P \ L(r) of |SCC(theta_c, theta, r)| <= kappa_scc.
SccCheck scc_feasible(std::span<const double> positions, const UncertaintyRegion& region,
                      const ScenarioConfig& cfg);

struct SccProfile {
    std::vector<Angle> angles;
    std::vector<double> values;
    std::vector<bool> in_mainlobe;
    Beamwidth beamwidth;
};

/// |SCC(theta_c, theta, r)| on every region angle, with main-lobe membership.
SccProfile scc_profile(std::span<const double> positions, const UncertaintyRegion& region,
                       const ScenarioConfig& cfg);

} // namespace maplace
