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

#include <random>

#include "maplace/geometry.hpp"
#include "maplace/scc.hpp"
#include "oracles.hpp"

using namespace maplace;

namespace {
const ScenarioConfig kCfg{};
const auto P1 = UncertaintyRegion::from_bounds(0, 20, 10);
const auto P2 = UncertaintyRegion::from_bounds(-10, 30, 10);
std::vector<double> vec(const Apv& a) { return {a.positions().begin(), a.positions().end()}; }
} // namespace

TEST_CASE("scc examples")
{
    const auto r = maxvar_apv(kCfg);
    CHECK(scc(Angle::degrees(13), Angle::degrees(13), r, kCfg) == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<double> pair{-0.25, 0.25};
    for (double t : {-60.0, -10.0, 5.0, 40.0, 80.0})
        CHECK(scc(Angle::degrees(0), Angle::degrees(t), pair, kCfg) ==
              doctest::Approx(std::abs(std::cos(kPi / 2 * std::sin(oracle::rad(t))))).epsilon(1e-12));
    CHECK(std::abs(std::cos(kPi / 2 * std::sin(kPi / 2))) < 1e-15);
}

TEST_CASE("scc agrees with the oracle, is symmetric and translation invariant")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(-80, 80), pos(-5, 5), shift(-3, 3);
    for (int i = 0; i < 100; ++i) {
        std::vector<double> r(6), t(6);
        const double s = shift(rng);
        for (int l = 0; l < 6; ++l) {
            r[l] = pos(rng);
            t[l] = r[l] + s;
        }
        const double ti = ang(rng), tj = ang(rng);
        const double x = scc(Angle::degrees(ti), Angle::degrees(tj), r, kCfg);
        CHECK(x == doctest::Approx(oracle::scc(oracle::rad(ti), oracle::rad(tj), r)).epsilon(1e-12));
        CHECK(x == doctest::Approx(scc(Angle::degrees(tj), Angle::degrees(ti), r, kCfg)).epsilon(1e-12));
        CHECK(x == doctest::Approx(scc(Angle::degrees(ti), Angle::degrees(tj), t, kCfg)).epsilon(1e-9));
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
    }
}

TEST_CASE("beamwidth is consistent across scan resolutions")
{
    for (auto crit : {HalfPowerCriterion::amplitude, HalfPowerCriterion::power}) {
        for (const auto& r : {uhw_apv(kCfg), ufa_apv(kCfg), maxvar_apv(kCfg)}) {
            const auto coarse = half_power_beamwidth(r, Angle::degrees(0), 0.01, kCfg, crit);
            const auto fine = half_power_beamwidth(r, Angle::degrees(0), 0.001, kCfg, crit);
            CHECK_FALSE(coarse.full_domain);
            CHECK(std::abs(coarse.width_deg - fine.width_deg) <= 0.01);
        }
    }
}

TEST_CASE("beamwidth level matches the selected criterion")
{
    const auto r = uhw_apv(kCfg);
    const Angle c = Angle::degrees(10);
    const auto amp = half_power_beamwidth(r, c, 0.001, kCfg, HalfPowerCriterion::amplitude);
    const auto pow = half_power_beamwidth(r, c, 0.001, kCfg, HalfPowerCriterion::power);
    CHECK(pow.width_deg < amp.width_deg);
    // the right edge of a centered-ish lobe: response at theta_c + upper crossing
    double lo = 10.0, hi = 40.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (scc(c, Angle::degrees(mid), r, kCfg) > 0.5 ? lo : hi) = mid;
    }
    double lo2 = -20.0, hi2 = 10.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo2 + hi2);
        (scc(c, Angle::degrees(mid), r, kCfg) > 0.5 ? hi2 : lo2) = mid;
    }
    CHECK(amp.width_deg == doctest::Approx(lo - lo2).epsilon(1e-5));
}

TEST_CASE("wider apertures give narrower beams")
{
    const Angle c = Angle::degrees(10);
    CHECK(half_power_beamwidth(ufa_apv(kCfg), c, 0.01, kCfg).width_deg <
          half_power_beamwidth(uhw_apv(kCfg), c, 0.01, kCfg).width_deg);
    auto r = vec(uhw_apv(kCfg));
    auto r2 = r;
    for (auto& x : r2)
        x *= 2;
    CHECK(half_power_beamwidth(r2, c, 0.01, kCfg).width_deg < half_power_beamwidth(r, c, 0.01, kCfg).width_deg);
}

TEST_CASE("full-domain beamwidth")
{
    ScenarioConfig two;
    two.num_elements = 2;
    const std::vector<double> tiny{-0.05, 0.05};
    const auto bw = half_power_beamwidth(tiny, Angle::degrees(0), 0.01, two);
    CHECK(bw.full_domain);
    CHECK(bw.width_deg == 180.0);
    CHECK(mainlobe_set(bw, P1).size() == P1.angles.size());
}

TEST_CASE("main-lobe set")
{
    const auto ml = mainlobe_set(Beamwidth{2.0, false}, P1);
    REQUIRE_FALSE(ml.empty());
    for (const auto& a : ml)
        CHECK(std::abs(a.deg() - 10.0) < 1.0);
    CHECK(ml.size() == 19); // 9.1 .. 10.9
    const auto narrow = mainlobe_set(Beamwidth{0.05, false}, P1);
    REQUIRE(narrow.size() == 1);
    CHECK(narrow.front().deg() == doctest::Approx(10.0));
}

TEST_CASE("feasibility examples")
{
    const auto mv1 = scc_feasible(maxvar_apv(kCfg), P1, kCfg);
    CHECK_FALSE(mv1.feasible);
    CHECK(mv1.max_sidelobe > 0.5);
    CHECK(scc_feasible(ufa_apv(kCfg), P1, kCfg).feasible);
    CHECK(scc_feasible(ufa_apv(kCfg), P2, kCfg).feasible);

    const auto opt1 = symmetric_apv({0.5, 3.65}, kCfg);
    CHECK(scc_feasible(opt1, P1, kCfg).feasible);
    CHECK_FALSE(scc_feasible(opt1, P2, kCfg).feasible);

    // empty complement
    const auto single = UncertaintyRegion::from_bounds(10, 10, 10);
    const auto s = scc_feasible(maxvar_apv(kCfg), single, kCfg);
    CHECK(s.feasible);
    CHECK(s.max_sidelobe == 0.0);
}

TEST_CASE("profile covers the region and marks the main lobe")
{
    const auto p = scc_profile(ufa_apv(kCfg), P1, kCfg);
    CHECK(p.angles.size() == P1.angles.size());
    double max_side = 0.0;
    for (std::size_t i = 0; i < p.angles.size(); ++i)
        if (!p.in_mainlobe[i])
            max_side = std::max(max_side, p.values[i]);
    CHECK(max_side == scc_feasible(ufa_apv(kCfg), P1, kCfg).max_sidelobe);
}
