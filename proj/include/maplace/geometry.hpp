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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maplace/model.hpp"

namespace maplace {

/// Tolerance on spacing and aperture comparisons, in length units.
inline constexpr double kGeometryTol = 1e-9;

/*!
 * Antenna position vector: sorted element coordinates along the array axis.
 *
 * A validated APV satisfies, for the scenario it was built against,
 *   - positions[L-1] - positions[0] <= D
 *   - positions[l] - positions[l-1] >= d
 *   - every position within [-D/2, D/2]
 */
class Apv {
public:
    /// Validates against cfg and throws ConstraintError naming the violated constraint.
    static Apv make(std::vector<double> positions, const ScenarioConfig& cfg);

    std::span<const double> positions() const { return positions_; }
    std::size_t size() const { return positions_.size(); }
    double operator[](std::size_t i) const { return positions_[i]; }
    double mean() const;

    operator std::span<const double>() const { return positions_; }

    friend bool operator==(const Apv&, const Apv&) = default;

private:
    explicit Apv(std::vector<double> p) : positions_(std::move(p)) {}
    std::vector<double> positions_;
};

/// Inner spacings a (outer) and b (inner) of the symmetric six-element family.
struct SymmetricParams {
    double a = 0.5;
    double b = 0.5;

    friend bool operator==(const SymmetricParams&, const SymmetricParams&) = default;
};

/// Inclusive parameter box [d, (D - 3d)/2] for a and b.
double symmetric_param_min(const ScenarioConfig& cfg);
double symmetric_param_max(const ScenarioConfig& cfg);

/// Gap between the two innermost elements, 2 (D/2 - a - b).
double symmetric_center_gap(SymmetricParams p, const ScenarioConfig& cfg);

/// [-D/2, -(D/2-a), -(D/2-a-b), D/2-a-b, D/2-a, D/2]. Requires L = 6.
Apv symmetric_apv(SymmetricParams p, const ScenarioConfig& cfg);

/// Two clusters packed with spacing d at the ends of the segment; the extra element of odd L goes to +D/2.
Apv maxvar_apv(const ScenarioConfig& cfg);

/// Uniform full-aperture array, spacing D/(L-1).
Apv ufa_apv(const ScenarioConfig& cfg);

/// Uniform half-wavelength array centered at 0.
Apv uhw_apv(const ScenarioConfig& cfg);

/// r^T r.
double position_moment(std::span<const double> positions);

/// Comma-separated, ascending, round-trip precision.
std::string format_positions(std::span<const double> positions);

/// Parses a comma-separated list of reals; throws ConfigError on malformed input.
std::vector<double> parse_positions(std::string_view text);

} // namespace maplace
