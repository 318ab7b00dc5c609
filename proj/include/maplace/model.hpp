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

#include <complex>
#include <numbers>
#include <span>

#include <Eigen/Dense>

namespace maplace {

using cdouble = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDegPerRad = 180.0 / kPi;

/// Largest |AoD| accepted by steering-vector evaluations, in degrees.
inline constexpr double kMaxAbsAngleDeg = 89.9;

/*!
 * Physical and statistical constants of a scenario.
 *
 * Lengths (aperture, min_spacing, wavelength and every antenna position) share one unit;
 * with the default wavelength of 1 they are expressed in wavelengths.
 */
struct ScenarioConfig {
    int num_elements = 6;      // L
    double aperture = 10.0;    // D
    double min_spacing = 0.5;  // d
    double wavelength = 1.0;   // lambda
    double snr_linear = 1.0;   // K P rho^2 / sigma^2
    double gamma = 0.5;        // power fraction of the directional beam

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;

    double wavenumber() const { return 2.0 * kPi / wavelength; }
};

/// Angle stored in radians; constructed and reported in degrees at interfaces.
class Angle {
public:
    constexpr Angle() = default;

    static constexpr Angle radians(double rad) { return Angle(rad); }
    static constexpr Angle degrees(double deg) { return Angle(deg / kDegPerRad); }

    constexpr double rad() const { return rad_; }
    constexpr double deg() const { return rad_ * kDegPerRad; }

    /// True when |theta| <= 89.9 degrees.
    bool in_domain() const;

    friend constexpr bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }
    friend constexpr auto operator<=>(Angle a, Angle b) { return a.rad_ <=> b.rad_; }

private:
    constexpr explicit Angle(double rad) : rad_(rad) {}
    double rad_ = 0.0;
};

/// Throws DomainError when theta is outside the steering domain.
void require_in_domain(Angle theta);

/// a(theta, r): entry l is exp(j k sin(theta) r_l).
CVector steering_vector(Angle theta, std::span<const double> positions, const ScenarioConfig& cfg);

/// Derivative of a(theta, r) with respect to theta: j k cos(theta) r_l exp(j k sin(theta) r_l).
CVector steering_derivative(Angle theta, std::span<const double> positions, const ScenarioConfig& cfg);

/// Phase vector exp(j k u r_l) for a direction cosine u = sin(theta); no domain check.
CVector phase_vector(double sin_theta, std::span<const double> positions, const ScenarioConfig& cfg);

} // namespace maplace
