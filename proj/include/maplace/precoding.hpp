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

#include "maplace/geometry.hpp"
#include "maplace/model.hpp"

namespace maplace {

/// Power fraction gamma of the directional beam; Lambda(gamma) = diag(gamma, 1 - gamma).
class PowerAllocation {
public:
    explicit PowerAllocation(double gamma);
    double gamma() const { return gamma_; }
    Eigen::Matrix2d lambda() const { return Eigen::Vector2d(gamma_, 1.0 - gamma_).asDiagonal(); }

private:
    double gamma_;
};

/// Complex L x G precoding matrix F with tr(F F^H) = 1.
class PrecodingMatrix {
public:
    /// Throws ConstraintError when tr(F F^H) deviates from 1 by more than 1e-10.
    explicit PrecodingMatrix(CMatrix f);

    const CMatrix& matrix() const { return f_; }
    Eigen::Index num_elements() const { return f_.rows(); }
    Eigen::Index num_beams() const { return f_.cols(); }

    /// X = F F^H.
    CMatrix covariance() const { return f_ * f_.adjoint(); }

private:
    CMatrix f_;
};

/// F*(theta, r, gamma) = [a* / ||a||, da* / ||da||] Lambda(gamma)^(1/2).
/// Throws EvaluationError when ||da|| vanishes (all r_l = 0).
PrecodingMatrix optimal_precoder(Angle theta, std::span<const double> positions, PowerAllocation gamma,
                                 const ScenarioConfig& cfg);

} // namespace maplace
