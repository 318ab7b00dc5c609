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

#include "maplace/region.hpp"

#include <cmath>

#include <fmt/format.h>

#include "maplace/errors.hpp"

namespace maplace {

UncertaintyRegion UncertaintyRegion::from_bounds(double min_deg, double max_deg, double center_deg, double step_deg,
                                                 double kappa_scc)
{
    if (!(step_deg > 0.0))
        throw ConfigError(fmt::format("region grid step must be > 0, got {}", step_deg));
    if (!(max_deg >= min_deg))
        throw ConfigError(fmt::format("region max {} below min {}", max_deg, min_deg));
    if (std::abs(min_deg) > kMaxAbsAngleDeg || std::abs(max_deg) > kMaxAbsAngleDeg)
        throw ConfigError(fmt::format("region [{}, {}] deg exceeds the +/-{} deg domain", min_deg, max_deg,
                                      kMaxAbsAngleDeg));
    if (center_deg < min_deg - 1e-12 || center_deg > max_deg + 1e-12)
        throw ConfigError(fmt::format("region center {} outside [{}, {}]", center_deg, min_deg, max_deg));
    if (!(kappa_scc > 0.0 && kappa_scc <= 1.0))
        throw ConfigError(fmt::format("kappa_scc = {} outside (0, 1]", kappa_scc));

    UncertaintyRegion region;
    region.center = Angle::degrees(center_deg);
    region.grid_step_deg = step_deg;
    region.kappa_scc = kappa_scc;

    const double span = max_deg - min_deg;
    const auto n = static_cast<long>(std::floor(span / step_deg + 1e-9));
    region.angles.reserve(static_cast<std::size_t>(n + 2));
    for (long i = 0; i <= n; ++i)
        region.angles.push_back(Angle::degrees(min_deg + static_cast<double>(i) * step_deg));
    if (max_deg - region.angles.back().deg() > 1e-9 * std::max(1.0, step_deg))
        region.angles.push_back(Angle::degrees(max_deg));
    return region;
}

UncertaintyRegion UncertaintyRegion::centered(double center_deg, double span_deg, double step_deg, double kappa_scc)
{
    if (!(span_deg >= 0.0))
        throw ConfigError(fmt::format("region span must be >= 0, got {}", span_deg));
    return from_bounds(center_deg - span_deg / 2.0, center_deg + span_deg / 2.0, center_deg, step_deg, kappa_scc);
}

} // namespace maplace
