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

#include "maplace/geometry.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "maplace/errors.hpp"

namespace maplace {

Apv Apv::make(std::vector<double> positions, const ScenarioConfig& cfg)
{
    if (positions.size() < 2)
        throw ConstraintError("APV needs at least two elements");
    if (static_cast<int>(positions.size()) != cfg.num_elements)
        throw ConstraintError(fmt::format("APV has {} elements, scenario expects {}", positions.size(),
                                          cfg.num_elements));
    const double half = cfg.aperture / 2.0;
    for (std::size_t l = 0; l < positions.size(); ++l) {
        if (!std::isfinite(positions[l]))
            throw ConstraintError("APV position is not finite");
        if (std::abs(positions[l]) > half + kGeometryTol)
            throw ConstraintError(fmt::format("position constraint: r[{}] = {} outside [-D/2, D/2]", l, positions[l]));
        if (l > 0 && positions[l] - positions[l - 1] < cfg.min_spacing - kGeometryTol)
            throw ConstraintError(fmt::format("min-spacing constraint: r[{}] - r[{}] = {} < d = {}", l, l - 1,
                                              positions[l] - positions[l - 1], cfg.min_spacing));
    }
    if (positions.back() - positions.front() > cfg.aperture + kGeometryTol)
        throw ConstraintError("aperture constraint: r[L-1] - r[0] exceeds D");
    return Apv(std::move(positions));
}

double Apv::mean() const
{
    return std::accumulate(positions_.begin(), positions_.end(), 0.0) / static_cast<double>(positions_.size());
}

double symmetric_param_min(const ScenarioConfig& cfg) { return cfg.min_spacing; }

double symmetric_param_max(const ScenarioConfig& cfg) { return (cfg.aperture - 3.0 * cfg.min_spacing) / 2.0; }

double symmetric_center_gap(SymmetricParams p, const ScenarioConfig& cfg)
{
    return 2.0 * (cfg.aperture / 2.0 - p.a - p.b);
}

Apv symmetric_apv(SymmetricParams p, const ScenarioConfig& cfg)
{
    if (cfg.num_elements != 6)
        throw ConstraintError("the (a, b) family is defined for six elements");
    const double lo = symmetric_param_min(cfg) - kGeometryTol;
    const double hi = symmetric_param_max(cfg) + kGeometryTol;
    if (p.a < lo || p.a > hi)
        throw ConstraintError(fmt::format("parameter box: a = {} outside [d, (D-3d)/2]", p.a));
    if (p.b < lo || p.b > hi)
        throw ConstraintError(fmt::format("parameter box: b = {} outside [d, (D-3d)/2]", p.b));
    const double gap = symmetric_center_gap(p, cfg);
    if (gap < cfg.min_spacing - kGeometryTol)
        throw ConstraintError(fmt::format("min-spacing constraint: center gap 2(D/2-a-b) = {} < d = {}", gap,
                                          cfg.min_spacing));
    const double r1 = cfg.aperture / 2.0;
    const double r2 = r1 - p.a;
    const double r3 = r2 - p.b;
    return Apv::make({-r1, -r2, -r3, r3, r2, r1}, cfg);
}

Apv maxvar_apv(const ScenarioConfig& cfg)
{
    cfg.validate();
    const int L = cfg.num_elements;
    const int upper = (L + 1) / 2;
    const int lower = L / 2;
    const double half = cfg.aperture / 2.0;
    std::vector<double> r;
    r.reserve(static_cast<std::size_t>(L));
    for (int i = 0; i < lower; ++i)
        r.push_back(-half + i * cfg.min_spacing);
    for (int i = upper - 1; i >= 0; --i)
        r.push_back(half - i * cfg.min_spacing);
    return Apv::make(std::move(r), cfg);
}

Apv ufa_apv(const ScenarioConfig& cfg)
{
    cfg.validate();
    const int L = cfg.num_elements;
    const double step = cfg.aperture / (L - 1);
    std::vector<double> r(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i)
        r[static_cast<std::size_t>(i)] = -cfg.aperture / 2.0 + i * step;
    // exact mirror symmetry so the mean is 0 bit-for-bit
    for (int i = 0; i < L / 2; ++i)
        r[static_cast<std::size_t>(L - 1 - i)] = -r[static_cast<std::size_t>(i)];
    if (L % 2 == 1)
        r[static_cast<std::size_t>(L / 2)] = 0.0;
    return Apv::make(std::move(r), cfg);
}

Apv uhw_apv(const ScenarioConfig& cfg)
{
    cfg.validate();
    const int L = cfg.num_elements;
    const double step = cfg.wavelength / 2.0;
    std::vector<double> r(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i)
        r[static_cast<std::size_t>(i)] = (i - (L - 1) / 2.0) * step;
    return Apv::make(std::move(r), cfg);
}

double position_moment(std::span<const double> positions)
{
    return std::inner_product(positions.begin(), positions.end(), positions.begin(), 0.0);
}

std::string format_positions(std::span<const double> positions)
{
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i)
            out += ',';
        out += fmt::format("{}", positions[i]);
    }
    return out;
}

std::vector<double> parse_positions(std::string_view text)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto token = text.substr(start, end - start);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.remove_suffix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw ConfigError(fmt::format("malformed position list '{}'", text));
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

} // namespace maplace
