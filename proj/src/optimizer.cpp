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

#include "maplace/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "maplace/errors.hpp"
#include "maplace/parallel.hpp"

namespace maplace {

namespace {

std::vector<double> axis_values(double lo, double hi, double step)
{
    const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i)
        out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
    return out;
}

// Strict "a is a better cell than b": lower worst-case CRB, then smaller a, then smaller b.
bool better_cell(const CellRecord& a, const CellRecord& b)
{
    const double va = a.worst_crb->variance_rad2;
    const double vb = b.worst_crb->variance_rad2;
    if (va != vb)
        return va < vb;
    if (a.params.a != b.params.a)
        return a.params.a < b.params.a;
    return a.params.b < b.params.b;
}

} // namespace

GridSpec GridSpec::full_box(const ScenarioConfig& cfg, double step)
{
    const double lo = symmetric_param_min(cfg);
    const double hi = symmetric_param_max(cfg);
    return {lo, hi, lo, hi, step};
}

void GridSpec::validate(const ScenarioConfig& cfg) const
{
    if (!(step > 0.0))
        throw ConfigError(fmt::format("grid step must be > 0, got {}", step));
    const double lo = symmetric_param_min(cfg) - kGeometryTol;
    const double hi = symmetric_param_max(cfg) + kGeometryTol;
    auto check = [&](const char* name, double v) {
        if (!(v >= lo && v <= hi))
            throw ConfigError(fmt::format("grid bound {} = {} outside [d, (D-3d)/2] = [{}, {}]", name, v,
                                          symmetric_param_min(cfg), symmetric_param_max(cfg)));
    };
    check("a_min", a_min);
    check("a_max", a_max);
    check("b_min", b_min);
    check("b_max", b_max);
    if (a_max < a_min || b_max < b_min)
        throw ConfigError("empty grid: max bound below min bound");
}

std::vector<double> GridSpec::a_values() const { return axis_values(a_min, a_max, step); }
std::vector<double> GridSpec::b_values() const { return axis_values(b_min, b_max, step); }

const CellRecord& OptimizationReport::best_cell() const
{
    if (!best)
        throw EvaluationError("infeasible region: no (a, b) cell satisfies all constraints");
    return cells[*best];
}

std::size_t OptimizationReport::feasible_count() const
{
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const CellRecord& c) {
        return c.feasible && c.worst_crb.has_value();
    }));
}

double OptimizationReport::feasible_fraction() const
{
    return cells.empty() ? 0.0 : static_cast<double>(feasible_count()) / static_cast<double>(cells.size());
}

CellRecord evaluate_cell(SymmetricParams params, const UncertaintyRegion& region, const ScenarioConfig& cfg,
                         bool diagnostics)
{
    CellRecord cell;
    cell.params = params;
    std::optional<Apv> apv;
    try {
        apv = symmetric_apv(params, cfg);
    } catch (const ConstraintError&) {
        return cell;
    }
    cell.geometry_feasible = true;
    const SccCheck check = scc_feasible(apv->positions(), region, cfg);
    cell.max_sidelobe_scc = check.max_sidelobe;
    cell.feasible = check.feasible;
    if (!cell.feasible && !diagnostics)
        return cell;
    try {
        const WorstCase worst = worst_case_crb(apv->positions(), region, cfg);
        cell.worst_crb = worst.crb;
        cell.worst_angle = worst.angle;
    } catch (const EvaluationError& e) {
        cell.error = e.what();
        cell.feasible = false;
    }
    return cell;
}

OptimizationReport optimize_placement(const GridSpec& grid, const UncertaintyRegion& region,
                                      const ScenarioConfig& cfg, const EvalOptions& opts)
{
    cfg.validate();
    grid.validate(cfg);
    const auto as = grid.a_values();
    const auto bs = grid.b_values();

    OptimizationReport report;
    report.a_count = as.size();
    report.b_count = bs.size();
    report.cells.resize(as.size() * bs.size());
    parallel_for(report.cells.size(), opts.threads, [&](std::size_t i) {
        report.cells[i] = evaluate_cell({as[i / bs.size()], bs[i % bs.size()]}, region, cfg, opts.diagnostics);
    });

    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const CellRecord& c = report.cells[i];
        if (c.feasible && c.worst_crb && (!report.best || better_cell(c, report.cells[*report.best])))
            report.best = i;
        if (c.geometry_feasible &&
            (!report.least_violating || c.max_sidelobe_scc < report.cells[*report.least_violating].max_sidelobe_scc))
            report.least_violating = i;
    }
    return report;
}

SolutionEval evaluate_solution(std::string name, std::span<const double> positions,
                               const UncertaintyRegion& region, const ScenarioConfig& cfg)
{
    SolutionEval out;
    out.name = std::move(name);
    out.positions.assign(positions.begin(), positions.end());
    const SccCheck check = scc_feasible(positions, region, cfg);
    out.feasible = check.feasible;
    out.max_sidelobe_scc = check.max_sidelobe;
    try {
        out.worst_crb = worst_case_crb(positions, region, cfg).crb;
    } catch (const EvaluationError& e) {
        out.error = e.what();
        out.feasible = false;
    }
    return out;
}

const SolutionEval& SweepRow::solution(std::string_view name) const
{
    for (const auto& s : solutions) {
        if (s.name == name)
            return s;
    }
    throw std::out_of_range(fmt::format("no solution named '{}'", name));
}

std::vector<SweepRow> sweep_region_size(const std::vector<double>& spans_deg, Angle theta_c, const GridSpec& grid,
                                        const ScenarioConfig& cfg, const SweepOptions& opts)
{
    if (spans_deg.empty())
        throw ConfigError("sweep needs at least one span");
    for (double s : spans_deg) {
        if (!(s >= 0.0))
            throw ConfigError(fmt::format("sweep span {} must be >= 0", s));
    }
    auto make_region = [&](double span) {
        auto region = UncertaintyRegion::centered(theta_c.deg(), span, opts.region_step_deg, opts.kappa_scc);
        region.beamwidth_step_deg = opts.beamwidth_step_deg;
        region.half_power = opts.half_power;
        return region;
    };

    const Apv maxvar = maxvar_apv(cfg);
    const Apv ufa = ufa_apv(cfg);
    const Apv uhw = uhw_apv(cfg);

    const double largest = *std::max_element(spans_deg.begin(), spans_deg.end());
    std::optional<Apv> pinned;
    {
        const auto report = optimize_placement(grid, make_region(largest), cfg, opts.eval);
        if (report.best)
            pinned = symmetric_apv(report.best_cell().params, cfg);
    }

    std::vector<SweepRow> rows;
    for (double span : spans_deg) {
        const auto region = make_region(span);
        SweepRow row;
        row.span_deg = span;

        const auto report = optimize_placement(grid, region, cfg, opts.eval);
        if (report.best) {
            row.opt_params = report.best_cell().params;
            const Apv opt = symmetric_apv(*row.opt_params, cfg);
            row.solutions.push_back(evaluate_solution("opt", opt.positions(), region, cfg));
        } else {
            SolutionEval none;
            none.name = "opt";
            none.error = "infeasible region";
            row.solutions.push_back(std::move(none));
        }
        row.solutions.push_back(evaluate_solution("maxvar", maxvar.positions(), region, cfg));
        row.solutions.push_back(evaluate_solution("ufa", ufa.positions(), region, cfg));
        row.solutions.push_back(evaluate_solution("uhw", uhw.positions(), region, cfg));
        if (pinned) {
            row.solutions.push_back(evaluate_solution("opt_pinned", pinned->positions(), region, cfg));
        } else {
            SolutionEval none;
            none.name = "opt_pinned";
            none.error = "infeasible region at largest span";
            row.solutions.push_back(std::move(none));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace maplace
