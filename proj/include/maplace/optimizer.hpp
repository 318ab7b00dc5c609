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

#include <optional>
#include <string>
#include <vector>

#include "maplace/crb.hpp"
#include "maplace/geometry.hpp"
#include "maplace/scc.hpp"

namespace maplace {

/// Rectangular (a, b) grid; values are min + i * step up to max inclusive.
struct GridSpec {
    double a_min = 0.5;
    double a_max = 4.25;
    double b_min = 0.5;
    double b_max = 4.25;
    double step = 0.05;

    /// Full parameter box [d, (D-3d)/2] for cfg at the given step.
    static GridSpec full_box(const ScenarioConfig& cfg, double step = 0.05);

    /// Throws ConfigError when the bounds leave the parameter box, are inverted, or step <= 0.
    void validate(const ScenarioConfig& cfg) const;

    std::vector<double> a_values() const;
    std::vector<double> b_values() const;
};

struct CellRecord {
    SymmetricParams params;
    bool geometry_feasible = false; // center gap respects d
    bool feasible = false;          // geometry and ambiguity constraint both hold
    double max_sidelobe_scc = 0.0;
    std::optional<CrbValue> worst_crb;
    std::optional<Angle> worst_angle;
    std::string error; // evaluation failure, empty otherwise
};

struct EvalOptions {
    unsigned threads = 1;       // 0 = hardware concurrency
    bool diagnostics = false;   // also evaluate worst-case CRB on SCC-infeasible cells
};

struct OptimizationReport {
    std::vector<CellRecord> cells; // a-major, b-minor
    std::size_t a_count = 0;
    std::size_t b_count = 0;
    std::optional<std::size_t> best;            // index into cells; absent when nothing is feasible
    std::optional<std::size_t> least_violating; // geometry-feasible cell with the smallest sidelobe SCC

    bool infeasible() const { return !best.has_value(); }
    const CellRecord& best_cell() const;
    std::size_t feasible_count() const;
    double feasible_fraction() const;
};

/// Evaluates one (a, b) cell: geometry, ambiguity constraint, and worst-case CRB.
CellRecord evaluate_cell(SymmetricParams params, const UncertaintyRegion& region, const ScenarioConfig& cfg,
                         bool diagnostics = false);

/*!
 * Exhaustive min-max search over the symmetric (a, b) family.
 *
 * The arg-min is taken over feasible cells only, ties resolved toward smaller a, then smaller b.
 * The result is independent of the thread count.
 */
OptimizationReport optimize_placement(const GridSpec& grid, const UncertaintyRegion& region,
                                      const ScenarioConfig& cfg, const EvalOptions& opts = {});

/// Feasibility and worst-case CRB of a fixed placement on a region.
struct SolutionEval {
    std::string name;
    std::vector<double> positions;
    bool feasible = false;
    double max_sidelobe_scc = 0.0;
    std::optional<CrbValue> worst_crb;
    std::string error;
};

SolutionEval evaluate_solution(std::string name, std::span<const double> positions,
                               const UncertaintyRegion& region, const ScenarioConfig& cfg);

struct SweepRow {
    double span_deg = 0.0;
    std::optional<SymmetricParams> opt_params; // absent when no cell is feasible at this span
    std::vector<SolutionEval> solutions;        // opt, maxvar, ufa, uhw, opt_pinned

    const SolutionEval& solution(std::string_view name) const;
};

struct SweepOptions {
    double region_step_deg = 0.1;
    double kappa_scc = 0.5;
    double beamwidth_step_deg = 0.01;
    HalfPowerCriterion half_power = HalfPowerCriterion::amplitude;
    EvalOptions eval;
};

/*!
 * Worst-case CRB versus region span for Opt-APV(span), MaxVar, UFA, UHW, and the Opt-APV of the
 * largest span re-evaluated at every span ("opt_pinned").
 */
std::vector<SweepRow> sweep_region_size(const std::vector<double>& spans_deg, Angle theta_c, const GridSpec& grid,
                                        const ScenarioConfig& cfg, const SweepOptions& opts = {});

} // namespace maplace
