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

#include "maplace/precoding.hpp"

#include <cmath>

#include <fmt/format.h>

#include "maplace/errors.hpp"

namespace maplace {

PowerAllocation::PowerAllocation(double gamma) : gamma_(gamma)
{
    if (!(gamma > 0.0 && gamma < 1.0))
        throw ConfigError(fmt::format("power allocation gamma = {} outside (0, 1)", gamma));
}

PrecodingMatrix::PrecodingMatrix(CMatrix f) : f_(std::move(f))
{
    const double trace = f_.squaredNorm();
    if (!(std::abs(trace - 1.0) <= 1e-10))
        throw ConstraintError(fmt::format("precoder power tr(FF^H) = {} != 1", trace));
}

PrecodingMatrix optimal_precoder(Angle theta, std::span<const double> positions, PowerAllocation gamma,
                                 const ScenarioConfig& cfg)
{
    const CVector a = steering_vector(theta, positions, cfg);
    const CVector da = steering_derivative(theta, positions, cfg);
    const double da_norm = da.norm();
    if (!(da_norm > 0.0))
        throw EvaluationError("degenerate geometry: steering derivative vanishes");

    CMatrix f(a.size(), 2);
    f.col(0) = a.conjugate() * (std::sqrt(gamma.gamma()) / a.norm());
    f.col(1) = da.conjugate() * (std::sqrt(1.0 - gamma.gamma()) / da_norm);
    return PrecodingMatrix(std::move(f));
}

} // namespace maplace
