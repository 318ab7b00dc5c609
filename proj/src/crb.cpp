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

#include "maplace/crb.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "maplace/errors.hpp"

namespace maplace {

namespace {

// Directional response power below this (relative to the array gain L) means the precoder is blind.
constexpr double kBlindTol = 1e-24;
constexpr double kFisherFloor = -1e-9;

CrbValue invert_fisher(double fisher, double scale, const ScenarioConfig& cfg)
{
    if (fisher < kFisherFloor * std::max(1.0, scale))
        throw EvaluationError(fmt::format("negative Fisher term {}", fisher));
    if (!(fisher > 0.0))
        throw EvaluationError("nonpositive Fisher term");
    return {1.0 / (2.0 * cfg.snr_linear * fisher)};
}

} // namespace

double CrbValue::sqrt_deg() const { return std::sqrt(variance_rad2) * kDegPerRad; }

CrbValue crb_general(std::span<const double> positions, const PrecodingMatrix& f, Angle theta,
                     const ScenarioConfig& cfg)
{
    if (static_cast<Eigen::Index>(positions.size()) != f.num_elements())
        throw EvaluationError("precoder rows do not match the number of elements");
    const CVector a = steering_vector(theta, positions, cfg);
    const CVector da = steering_derivative(theta, positions, cfg);

    const CVector u = f.matrix().adjoint() * a.conjugate();  // F^H a*
    const CVector v = f.matrix().adjoint() * da.conjugate(); // F^H da*
    const double u2 = u.squaredNorm();
    if (!(u2 > kBlindTol * static_cast<double>(positions.size())))
        throw EvaluationError("precoder blind at theta");
    const double v2 = v.squaredNorm();
    const cdouble cross = u.dot(v); // a^T F F^H da*
    return invert_fisher(v2 - std::norm(cross) / u2, v2, cfg);
}

CrbValue crb_from_covariance(std::span<const double> positions, const CMatrix& x, Angle theta,
                             const ScenarioConfig& cfg)
{
    const CVector a = steering_vector(theta, positions, cfg);
    const CVector da = steering_derivative(theta, positions, cfg);
    const double aXa = (a.transpose() * x * a.conjugate()).value().real();
    if (!(aXa > kBlindTol * static_cast<double>(positions.size())))
        throw EvaluationError("precoder blind at theta");
    const double dXd = (da.transpose() * x * da.conjugate()).value().real();
    const cdouble aXd = (a.transpose() * x * da.conjugate()).value();
    return invert_fisher(dXd - std::norm(aXd) / aXa, dXd, cfg);
}

CrbValue crb_closed_form(std::span<const double> positions, Angle theta, const ScenarioConfig& cfg)
{
    require_in_domain(theta);
    double sum = 0.0;
    double moment = 0.0;
    double scale = 0.0;
    for (double r : positions) {
        sum += r;
        moment += r * r;
        scale = std::max(scale, std::abs(r));
    }
    if (std::abs(sum) > 1e-9 * std::max(1.0, scale) * static_cast<double>(positions.size()))
        throw EvaluationError("closed-form CRB requires zero-mean positions");
    if (!(moment > 0.0))
        throw EvaluationError("degenerate geometry: r^T r = 0");
    const double kc = cfg.wavenumber() * std::cos(theta.rad());
    return {1.0 / (2.0 * cfg.snr_linear * (1.0 - cfg.gamma) * kc * kc * moment)};
}

WorstCase worst_case_crb(std::span<const double> positions, const PrecodingMatrix& f,
                         const UncertaintyRegion& region, const ScenarioConfig& cfg)
{
    if (region.angles.empty())
        throw EvaluationError("empty uncertainty region");
    WorstCase worst{{-std::numeric_limits<double>::infinity()}, region.angles.front()};
    const double center = region.center.rad();
    for (Angle theta : region.angles) {
        CrbValue value;
        try {
            value = crb_general(positions, f, theta, cfg);
        } catch (const EvaluationError& e) {
            throw EvaluationError(fmt::format("at theta = {} deg: {}", theta.deg(), e.what()));
        }
        const double v = value.variance_rad2;
        const double w = worst.crb.variance_rad2;
        bool take = v > w;
        if (v == w) {
            const double dn = std::abs(theta.rad() - center);
            const double dw = std::abs(worst.angle.rad() - center);
            take = dn < dw || (dn == dw && theta < worst.angle);
        }
        if (take)
            worst = {value, theta};
    }
    return worst;
}

WorstCase worst_case_crb(std::span<const double> positions, const UncertaintyRegion& region,
                         const ScenarioConfig& cfg)
{
    const auto f = optimal_precoder(region.center, positions, PowerAllocation(cfg.gamma), cfg);
    return worst_case_crb(positions, f, region, cfg);
}

} // namespace maplace
