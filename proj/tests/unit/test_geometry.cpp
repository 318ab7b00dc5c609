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

#include <doctest.h>

#include "maplace/errors.hpp"
#include "maplace/geometry.hpp"
#include "oracles.hpp"

using namespace maplace;

namespace {
std::vector<double> vec(const Apv& a) { return {a.positions().begin(), a.positions().end()}; }

void check_positions(const Apv& a, std::vector<double> expect)
{
    REQUIRE(a.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(a[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

ScenarioConfig with(int l, double aperture = 10.0)
{
    ScenarioConfig c;
    c.num_elements = l;
    c.aperture = aperture;
    return c;
}
} // namespace

TEST_CASE("symmetric family examples")
{
    const ScenarioConfig cfg;
    check_positions(symmetric_apv({0.5, 0.5}, cfg), {-5, -4.5, -4, 4, 4.5, 5});
    check_positions(symmetric_apv({2, 2}, cfg), {-5, -3, -1, 1, 3, 5});
    CHECK(symmetric_apv({0.5, 0.5}, cfg) == maxvar_apv(cfg));
    CHECK(symmetric_apv({2, 2}, cfg) == ufa_apv(cfg));
    CHECK_THROWS_AS(symmetric_apv({0.5, 4.3}, cfg), ConstraintError);
    CHECK_THROWS_AS(symmetric_apv({0.4, 1.0}, cfg), ConstraintError);
    CHECK_THROWS_AS(symmetric_apv({1.0, 2.0}, with(4)), ConstraintError);
}

TEST_CASE("symmetric family invariants over the whole box")
{
    const ScenarioConfig cfg;
    int built = 0;
    for (double a = 0.5; a <= 4.25 + 1e-9; a += 0.25)
        for (double b = 0.5; b <= 4.25 + 1e-9; b += 0.25) {
            if (symmetric_center_gap({a, b}, cfg) < cfg.min_spacing - 1e-9)
                continue;
            const auto r = symmetric_apv({a, b}, cfg);
            ++built;
            CHECK(r.mean() == 0.0);
            CHECK(r[5] - r[0] <= cfg.aperture + 1e-9);
            for (std::size_t l = 1; l < 6; ++l)
                CHECK(r[l] - r[l - 1] >= cfg.min_spacing - 1e-9);
        }
    CHECK(built > 100);
    CHECK(symmetric_param_min(cfg) == 0.5);
    CHECK(symmetric_param_max(cfg) == 4.25);
}

TEST_CASE("MaxVar placements")
{
    check_positions(maxvar_apv(ScenarioConfig{}), {-5, -4.5, -4, 4, 4.5, 5});
    check_positions(maxvar_apv(with(2)), {-5, 5});
    // odd L: extra element at the +D/2 end
    check_positions(maxvar_apv(with(3)), {-5, 4.5, 5});
    const auto m4 = maxvar_apv(with(4));
    CHECK(position_moment(m4) == doctest::Approx(90.5).epsilon(1e-12));
}

TEST_CASE("MaxVar beats brute force on a 0.05 grid for L = 4")
{
    const double best = oracle::brute_force_max_moment(4, 10.0, 0.5, 0.05);
    const auto m4 = maxvar_apv(with(4));
    // the oracle reports centered moments
    std::vector<double> c = vec(m4);
    const double mean = m4.mean();
    for (auto& x : c)
        x -= mean;
    CHECK(position_moment(c) >= best - 1e-9);
}

TEST_CASE("uniform baselines")
{
    check_positions(ufa_apv(ScenarioConfig{}), {-5, -3, -1, 1, 3, 5});
    check_positions(ufa_apv(with(2)), {-5, 5});
    CHECK(ufa_apv(ScenarioConfig{}).mean() == 0.0);
    const auto uhw = uhw_apv(ScenarioConfig{});
    check_positions(uhw, {-1.25, -0.75, -0.25, 0.25, 0.75, 1.25});
    CHECK(uhw[5] - uhw[0] <= 10.0);
    check_positions(uhw_apv(with(3)), {-0.5, 0, 0.5});
}

TEST_CASE("position moment")
{
    CHECK(position_moment(maxvar_apv(ScenarioConfig{})) == doctest::Approx(122.5).epsilon(1e-12));
    CHECK(position_moment(uhw_apv(ScenarioConfig{})) == doctest::Approx(4.375).epsilon(1e-12));
    const std::vector<double> zero(6, 0.0);
    CHECK(position_moment(zero) == 0.0);
}

TEST_CASE("Apv validation names the constraint")
{
    const ScenarioConfig cfg;
    CHECK_THROWS_WITH_AS(Apv::make({-5, -4.8, -4, 4, 4.5, 5}, cfg), doctest::Contains("min-spacing"),
                         ConstraintError);
    CHECK_THROWS_WITH_AS(Apv::make({-5.5, -4.5, -4, 4, 4.5, 5}, cfg), doctest::Contains("position"), ConstraintError);
    CHECK_THROWS_AS(Apv::make({-5, 5}, cfg), ConstraintError);
    CHECK_NOTHROW(Apv::make({-5, -4.5 + 5e-10, -4, 4, 4.5, 5}, cfg));
}

TEST_CASE("position lists round-trip")
{
    const auto r = maxvar_apv(ScenarioConfig{});
    CHECK(parse_positions(format_positions(r)) == vec(r));
    CHECK(parse_positions(" -1.5, 0 ,2 ") == std::vector<double>{-1.5, 0, 2});
    CHECK_THROWS_AS(parse_positions("1,,2"), ConfigError);
    CHECK_THROWS_AS(parse_positions("1,x"), ConfigError);
}
