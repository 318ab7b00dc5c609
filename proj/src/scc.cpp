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

#include "maplace/scc.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "maplace/errors.hpp"

namespace maplace {

namespace {

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// |a^H(u_i) a(u_j)| / L written directly on direction cosines.
double scc_sin(double sin_i, double sin_j, std::span<const double> positions, const ScenarioConfig& cfg)
{
    const double ku = cfg.wavenumber() * (sin_j - sin_i);
    cdouble acc = 0.0;
    for (double r : positions)
        acc += std::polar(1.0, ku * r);
    return clamp_unit(std::abs(acc) / static_cast<double>(positions.size()));
}

// Signed distance of the response from the half-power level; >= 0 inside the main lobe.
double lobe_margin(double scc_mag, HalfPowerCriterion criterion)
{
    return criterion == HalfPowerCriterion::power ? scc_mag * scc_mag - 0.5 : scc_mag - 0.5;
}

// Offset (deg, >= 0) from theta_c to the half-power crossing in direction dir, or nullopt when
// the scan reaches +/-90 deg first.
std::optional<double> scan_crossing(std::span<const double> positions, double center_deg, int dir, double step,
                                    const ScenarioConfig& cfg, HalfPowerCriterion criterion)
{
    const double sin_c = std::sin(center_deg / kDegPerRad);
    double prev_offset = 0.0;
    double prev_margin = lobe_margin(1.0, criterion);
    for (long i = 1;; ++i) {
        double offset = static_cast<double>(i) * step;
        const double theta = center_deg + dir * offset;
        const bool at_edge = std::abs(theta) >= 90.0;
        const double clamped = std::clamp(theta, -90.0, 90.0);
        offset = std::abs(clamped - center_deg);
        const double margin =
            lobe_margin(scc_sin(sin_c, std::sin(clamped / kDegPerRad), positions, cfg), criterion);
        if (margin < 0.0) {
            const double t = prev_margin / (prev_margin - margin);
            return prev_offset + t * (offset - prev_offset);
        }
        if (at_edge)
            return std::nullopt;
        prev_offset = offset;
        prev_margin = margin;
    }
}

} // namespace

double scc(Angle theta_i, Angle theta_j, std::span<const double> positions, const ScenarioConfig& cfg)
{
    return scc_sin(std::sin(theta_i.rad()), std::sin(theta_j.rad()), positions, cfg);
}

Beamwidth half_power_beamwidth(std::span<const double> positions, Angle theta_c, double fine_step_deg,
                               const ScenarioConfig& cfg, HalfPowerCriterion criterion)
{
    if (!(fine_step_deg > 0.0))
        throw ConfigError(fmt::format("beamwidth scan step must be > 0, got {}", fine_step_deg));
    const double c = theta_c.deg();
    const auto right = scan_crossing(positions, c, +1, fine_step_deg, cfg, criterion);
    const auto left = scan_crossing(positions, c, -1, fine_step_deg, cfg, criterion);
    if (!right || !left)
        return {180.0, true};
    return {*left + *right, false};
}

std::vector<Angle> mainlobe_set(const Beamwidth& bw, const UncertaintyRegion& region)
{
    std::vector<Angle> out;
    for (Angle theta : region.angles) {
        if (bw.full_domain || std::abs(theta.deg() - region.center.deg()) < bw.width_deg / 2.0)
            out.push_back(theta);
    }
    return out;
}

std::vector<Angle> mainlobe_set(std::span<const double> positions, const UncertaintyRegion& region,
                                const ScenarioConfig& cfg)
{
    return mainlobe_set(half_power_beamwidth(positions, region.center, region.beamwidth_step_deg, cfg,
                                             region.half_power),
                        region);
}

SccCheck scc_feasible(std::span<const double> positions, const UncertaintyRegion& region,
                      const ScenarioConfig& cfg)
{
    SccCheck check;
    check.beamwidth =
        half_power_beamwidth(positions, region.center, region.beamwidth_step_deg, cfg, region.half_power);
    const double half = check.beamwidth.width_deg / 2.0;
    const double sin_c = std::sin(region.center.rad());
    for (Angle theta : region.angles) {
        if (check.beamwidth.full_domain || std::abs(theta.deg() - region.center.deg()) < half)
            continue;
        check.max_sidelobe = std::max(check.max_sidelobe, scc_sin(sin_c, std::sin(theta.rad()), positions, cfg));
    }
    check.feasible = check.max_sidelobe <= region.kappa_scc;
    return check;
}

SccProfile scc_profile(std::span<const double> positions, const UncertaintyRegion& region,
                       const ScenarioConfig& cfg)
{
    SccProfile profile;
    profile.beamwidth =
        half_power_beamwidth(positions, region.center, region.beamwidth_step_deg, cfg, region.half_power);
    const double half = profile.beamwidth.width_deg / 2.0;
    for (Angle theta : region.angles) {
        profile.angles.push_back(theta);
        profile.values.push_back(scc(region.center, theta, positions, cfg));
        profile.in_mainlobe.push_back(profile.beamwidth.full_domain ||
                                      std::abs(theta.deg() - region.center.deg()) < half);
    }
    return profile;
}

} // namespace maplace
