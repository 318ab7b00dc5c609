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

#include "maplace/model.hpp"

#include <cmath>
#include <string>

#include "maplace/errors.hpp"

namespace maplace {

void ScenarioConfig::validate() const
{
    if (num_elements < 2)
        throw ConfigError("num_elements must be >= 2, got " + std::to_string(num_elements));
    if (!(min_spacing > 0.0))
        throw ConfigError("min_spacing must be > 0");
    if (!(wavelength > 0.0))
        throw ConfigError("wavelength must be > 0");
    if (!(aperture > (num_elements - 1) * min_spacing - 1e-9))
        throw ConfigError("aperture must be at least (num_elements - 1) * min_spacing");
    if (!(snr_linear > 0.0) || !std::isfinite(snr_linear))
        throw ConfigError("snr_linear must be positive and finite");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw ConfigError("gamma must lie in (0, 1)");
}

bool Angle::in_domain() const
{
    return std::isfinite(rad_) && std::abs(deg()) <= kMaxAbsAngleDeg + 1e-12;
}

void require_in_domain(Angle theta)
{
    if (!theta.in_domain())
        throw DomainError("angle " + std::to_string(theta.deg()) + " deg outside [-89.9, 89.9] deg");
}

CVector phase_vector(double sin_theta, std::span<const double> positions, const ScenarioConfig& cfg)
{
    const double ku = cfg.wavenumber() * sin_theta;
    CVector a(static_cast<Eigen::Index>(positions.size()));
    for (std::size_t l = 0; l < positions.size(); ++l)
        a[static_cast<Eigen::Index>(l)] = std::polar(1.0, ku * positions[l]);
    return a;
}

CVector steering_vector(Angle theta, std::span<const double> positions, const ScenarioConfig& cfg)
{
    require_in_domain(theta);
    return phase_vector(std::sin(theta.rad()), positions, cfg);
}

CVector steering_derivative(Angle theta, std::span<const double> positions, const ScenarioConfig& cfg)
{
    require_in_domain(theta);
    const double kc = cfg.wavenumber() * std::cos(theta.rad());
    CVector a = phase_vector(std::sin(theta.rad()), positions, cfg);
    for (std::size_t l = 0; l < positions.size(); ++l) {
        const auto i = static_cast<Eigen::Index>(l);
        a[i] *= cdouble(0.0, kc * positions[l]);
    }
    return a;
}

} // namespace maplace
