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

#include "maplace/crb.hpp"
#include "maplace/errors.hpp"
#include "maplace/optimizer.hpp"
#include "maplace/scc.hpp"

using namespace maplace;

namespace {
const ScenarioConfig kCfg{};
const auto P1 = UncertaintyRegion::from_bounds(0, 20, 10);
const auto P2 = UncertaintyRegion::from_bounds(-10, 30, 10);
const GridSpec kCoarse = GridSpec::full_box(kCfg, 0.25);
} // namespace

TEST_CASE("grid values")
{
    const auto g = GridSpec::full_box(kCfg);
    CHECK(g.a_values().size() == 76);
    CHECK(g.a_values().front() == 0.5);
    CHECK(g.a_values().back() == 4.25);
    GridSpec bad = g;
    bad.a_max = 0.4;
    CHECK_THROWS_AS(bad.validate(kCfg), ConfigError);
    bad = g;
    bad.step = 0.0;
    CHECK_THROWS_AS(bad.validate(kCfg), ConfigError);
}

TEST_CASE("results do not depend on the thread count")
{
    const auto one = optimize_placement(kCoarse, P1, kCfg, {1, true});
    const auto four = optimize_placement(kCoarse, P1, kCfg, {4, true});
    REQUIRE(one.cells.size() == four.cells.size());
    CHECK(one.best == four.best);
    for (std::size_t i = 0; i < one.cells.size(); ++i) {
        CHECK(one.cells[i].feasible == four.cells[i].feasible);
        CHECK(one.cells[i].max_sidelobe_scc == four.cells[i].max_sidelobe_scc);
        CHECK(one.cells[i].worst_crb.has_value() == four.cells[i].worst_crb.has_value());
        if (one.cells[i].worst_crb)
            CHECK(one.cells[i].worst_crb->variance_rad2 == four.cells[i].worst_crb->variance_rad2);
    }
}

TEST_CASE("cell records match scalar re-evaluation")
{
    const auto rep = optimize_placement(kCoarse, P1, kCfg);
    std::size_t checked = 0;
    for (const auto& c : rep.cells) {
        if (!c.feasible)
            continue;
        const auto r = symmetric_apv(c.params, kCfg);
        CHECK(c.worst_crb->variance_rad2 == worst_case_crb(r, P1, kCfg).crb.variance_rad2);
        CHECK(c.max_sidelobe_scc == scc_feasible(r, P1, kCfg).max_sidelobe);
        ++checked;
    }
    CHECK(checked == rep.feasible_count());
    CHECK(checked > 0);
}

TEST_CASE("best cell is the feasible minimum with the lexicographic tie-break")
{
    const auto rep = optimize_placement(kCoarse, P1, kCfg);
    REQUIRE_FALSE(rep.infeasible());
    const auto& best = rep.best_cell();
    for (const auto& c : rep.cells) {
        if (!c.feasible)
            continue;
        CHECK(c.worst_crb->variance_rad2 >= best.worst_crb->variance_rad2);
        if (c.worst_crb->variance_rad2 == best.worst_crb->variance_rad2)
            CHECK(std::pair(c.params.a, c.params.b) >= std::pair(best.params.a, best.params.b));
    }
}

TEST_CASE("default-grid optimum on P1")
{
    const auto rep = optimize_placement(GridSpec::full_box(kCfg), P1, kCfg);
    const auto& best = rep.best_cell();
    CHECK_FALSE((best.params == SymmetricParams{0.5, 0.5}));
    CHECK(rep.feasible_fraction() < 1.0);
    const auto ufa = evaluate_solution("ufa", ufa_apv(kCfg), P1, kCfg);
    REQUIRE(ufa.feasible);
    CHECK(best.worst_crb->variance_rad2 < ufa.worst_crb->variance_rad2);
}

TEST_CASE("disabling the ambiguity constraint recovers MaxVar")
{
    for (auto region : {P1, P2}) {
        region.kappa_scc = 1.0;
        const auto rep = optimize_placement(kCoarse, region, kCfg);
        CHECK((rep.best_cell().params == SymmetricParams{0.5, 0.5}));
    }
}

TEST_CASE("larger regions shrink the feasible set and raise the optimum")
{
    const auto r1 = optimize_placement(kCoarse, P1, kCfg);
    const auto r2 = optimize_placement(kCoarse, P2, kCfg);
    for (std::size_t i = 0; i < r1.cells.size(); ++i)
        if (r2.cells[i].feasible)
            CHECK(r1.cells[i].feasible);
    CHECK(r2.feasible_count() < r1.feasible_count());
    CHECK(r2.best_cell().worst_crb->variance_rad2 >= r1.best_cell().worst_crb->variance_rad2);

    double prev = 0.0;
    for (double span : {0.0, 4.0, 12.0, 20.0, 30.0}) {
        const auto rep = optimize_placement(kCoarse, UncertaintyRegion::centered(10, span), kCfg);
        const double v = rep.best_cell().worst_crb->variance_rad2;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("corner cells with a too-small center gap are geometry-infeasible")
{
    const auto rep = optimize_placement(kCoarse, P1, kCfg);
    for (const auto& c : rep.cells) {
        const bool ok = symmetric_center_gap(c.params, kCfg) >= kCfg.min_spacing - 1e-9;
        CHECK(c.geometry_feasible == ok);
        if (!ok)
            CHECK_FALSE(c.feasible);
    }
}

TEST_CASE("diagnostics adds CRBs on SCC-infeasible cells")
{
    const auto plain = optimize_placement(kCoarse, P1, kCfg);
    const auto diag = optimize_placement(kCoarse, P1, kCfg, {1, true});
    std::size_t extra = 0;
    for (std::size_t i = 0; i < plain.cells.size(); ++i) {
        if (!plain.cells[i].feasible && plain.cells[i].geometry_feasible) {
            CHECK_FALSE(plain.cells[i].worst_crb.has_value());
            extra += diag.cells[i].worst_crb.has_value();
        }
    }
    CHECK(extra > 0);
    CHECK(plain.best == diag.best);
}

TEST_CASE("infeasible region keeps the least-violating cell")
{
    auto strict = P2;
    strict.kappa_scc = 0.05;
    const auto rep = optimize_placement(kCoarse, strict, kCfg);
    CHECK(rep.infeasible());
    REQUIRE(rep.least_violating.has_value());
    const double lv = rep.cells[*rep.least_violating].max_sidelobe_scc;
    for (const auto& c : rep.cells)
        if (c.geometry_feasible)
            CHECK(c.max_sidelobe_scc >= lv);
    CHECK_THROWS_AS(rep.best_cell(), EvaluationError);
}

TEST_CASE("region sweep")
{
    const auto rows = sweep_region_size({0, 5, 20, 40}, Angle::degrees(10), kCoarse, kCfg);
    REQUIRE(rows.size() == 4);
    // singleton region: CRB at the center, ordered by r^T r
    const auto& r0 = rows[0];
    const double c_mv = r0.solution("maxvar").worst_crb->variance_rad2;
    CHECK(c_mv == doctest::Approx(crb_closed_form(maxvar_apv(kCfg), Angle::degrees(10), kCfg).variance_rad2)
                      .epsilon(1e-12));
    CHECK(c_mv < r0.solution("ufa").worst_crb->variance_rad2);
    CHECK(r0.solution("ufa").worst_crb->variance_rad2 < r0.solution("uhw").worst_crb->variance_rad2);
    CHECK((rows[1].opt_params == SymmetricParams{0.5, 0.5}));
    for (const auto& row : rows) {
        const auto& opt = row.solution("opt");
        REQUIRE(opt.feasible);
        for (const char* name : {"ufa", "uhw", "opt_pinned"}) {
            const auto& s = row.solution(name);
            if (s.feasible)
                CHECK(opt.worst_crb->variance_rad2 <= s.worst_crb->variance_rad2);
        }
    }
    CHECK(rows.back().solution("opt_pinned").worst_crb->variance_rad2 ==
          rows.back().solution("opt").worst_crb->variance_rad2);
    CHECK_THROWS_AS(rows[0].solution("nope"), std::out_of_range);
    CHECK_THROWS_AS(sweep_region_size({}, Angle::degrees(10), kCoarse, kCfg), ConfigError);
}
