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

#include <stdexcept>
#include <string>

namespace maplace {

// Angle outside the admissible AoD domain, or an endfire evaluation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Geometry constraint violated (aperture, min spacing, parameter box).
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical evaluation failed (blind precoder, nonpositive Fisher term, degenerate geometry).
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration value or malformed config file.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace maplace
