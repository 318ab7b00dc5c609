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

#include "maplace/precoding.hpp"
#include "maplace/region.hpp"

namespace maplace {

/// CRB on the AoD estimator variance.
struct CrbValue {
    double variance_rad2 = 0.0;

    /// sqrt(CRB) in degrees.
    double sqrt_deg() const;
};

/*!
 * Slepian-Bangs bound for an arbitrary precoder:
 *
 *   CRB = [2 SNR (||F^H da*||^2 - |a^T F F^H da*|^2 / ||F^H a*||^2)]^{-1}
 *
 * Throws EvaluationError when the precoder is blind at theta (||F^H a*|| = 0) or the
 * Fisher term is not positive.
 */
CrbValue crb_general(std::span<const double> positions, const PrecodingMatrix& f, Angle theta,
                     const ScenarioConfig& cfg);

/// Same bound written in terms of X = F F^H (only X matters).
CrbValue crb_from_covariance(std::span<const double> positions, const CMatrix& x, Angle theta,
                             const ScenarioConfig& cfg);

/// Closed form under the matched optimal precoder, [2 SNR (1-gamma) (k cos theta)^2 r^T r]^{-1}.
/// Only valid for zero-mean positions; throws EvaluationError otherwise.
CrbValue crb_closed_form(std::span<const double> positions, Angle theta, const ScenarioConfig& cfg);

struct WorstCase {
    CrbValue crb;
    Angle angle;
};

/*!
 * max over theta in P of crb_general(r, F*(theta_c, r, gamma), theta).
 *
 * Ties go to the angle nearest the center, then to the smaller angle. Errors from
 * crb_general are rethrown tagged with the offending angle.
 */
WorstCase worst_case_crb(std::span<const double> positions, const UncertaintyRegion& region,
                         const ScenarioConfig& cfg);

/// Same as above with a precomputed precoder.
WorstCase worst_case_crb(std::span<const double> positions, const PrecodingMatrix& f,
                         const UncertaintyRegion& region, const ScenarioConfig& cfg);

} // namespace maplace
