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

#include "maplace/commands.hpp"

#include <cmath>

#include <fmt/format.h>

#include "maplace/crb.hpp"
#include "maplace/csv.hpp"
#include "maplace/errors.hpp"
#include "maplace/optimizer.hpp"
#include "maplace/scc.hpp"
#include "maplace/simulate.hpp"

namespace fs = std::filesystem;

namespace maplace {

namespace {

std::string sanitize(std::string s)
{
    for (char& c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.' && c != '_')
            c = '_';
    }
    return s;
}

CsvMeta meta_for(const std::string& command, const RunConfig& cfg, std::vector<std::string> exclude = {})
{
    return {command, cfg.describe(exclude), {}, cfg.timestamp};
}

EvalOptions eval_options(const RunConfig& cfg) { return {cfg.threads, cfg.diagnostics}; }

std::string params_text(const SymmetricParams& p) { return fmt::format("a={} b={}", p.a, p.b); }

} // namespace

ResolvedApv resolve_apv(const std::string& selector, std::size_t index, const RunConfig& cfg)
{
    const ScenarioConfig scenario = cfg.resolved_scenario();
    if (selector == "maxvar") {
        const auto apv = maxvar_apv(scenario);
        return {"maxvar", {apv.positions().begin(), apv.positions().end()}};
    }
    if (selector == "ufa") {
        const auto apv = ufa_apv(scenario);
        return {"ufa", {apv.positions().begin(), apv.positions().end()}};
    }
    if (selector == "uhw") {
        const auto apv = uhw_apv(scenario);
        return {"uhw", {apv.positions().begin(), apv.positions().end()}};
    }
    if (selector == "opt" || selector.rfind("opt:", 0) == 0) {
        RunConfig local = cfg;
        std::string label = "opt";
        if (selector != "opt") {
            apply_region_triplet(local, std::string_view(selector).substr(4), "selector '" + selector + "'");
            label = sanitize(fmt::format("opt_{}_{}_{}", local.region.min_deg, local.region.max_deg,
                                         local.region.center_deg));
        }
        const auto report =
            optimize_placement(local.resolved_grid(), local.region.build(), scenario, eval_options(cfg));
        if (report.infeasible())
            throw EvaluationError(fmt::format("selector '{}': infeasible region", selector));
        const auto apv = symmetric_apv(report.best_cell().params, scenario);
        return {label, {apv.positions().begin(), apv.positions().end()}};
    }
    if (selector.rfind("pos:", 0) == 0) {
        const auto apv = Apv::make(parse_positions(std::string_view(selector).substr(4)), scenario);
        return {fmt::format("pos{}", index), {apv.positions().begin(), apv.positions().end()}};
    }
    throw ConfigError(fmt::format("unknown APV selector '{}'", selector));
}

CommandOutput cmd_crb_map(const RunConfig& cfg)
{
    const auto scenario = cfg.resolved_scenario();
    const auto region = cfg.region.build();
    const auto report = optimize_placement(cfg.resolved_grid(), region, scenario, eval_options(cfg));

    CommandOutput out;
    const fs::path dir(cfg.out_dir);
    {
        CsvWriter csv(dir / "crb_map.csv", meta_for("crb-map", cfg, {"apv.selectors"}),
                      {"a_lambda", "b_lambda", "feasible", "worst_crb_deg", "worst_crb_rad2", "max_sidelobe_scc"});
        for (const auto& cell : report.cells) {
            if (!cell.error.empty())
                out.exit_code = kExitPartialFailure;
            std::optional<double> deg, rad2, scc_val;
            if (cell.worst_crb) {
                deg = cell.worst_crb->sqrt_deg();
                rad2 = cell.worst_crb->variance_rad2;
            }
            if (cell.geometry_feasible)
                scc_val = cell.max_sidelobe_scc;
            csv.row({csv_real(cell.params.a), csv_real(cell.params.b), csv_bool(cell.feasible), csv_real(deg),
                     csv_real(rad2), csv_real(scc_val)});
        }
        out.files.push_back(csv.path());
    }
    {
        CsvWriter csv(dir / "crb_map_summary.csv", meta_for("crb-map", cfg, {"apv.selectors"}),
                      {"status", "best_a_lambda", "best_b_lambda", "best_worst_crb_deg", "best_worst_crb_rad2",
                       "best_worst_angle_deg", "feasible_fraction", "least_violating_a_lambda",
                       "least_violating_b_lambda", "least_violating_scc"});
        std::vector<std::string> row(10);
        row[0] = report.infeasible() ? "infeasible" : "ok";
        if (report.best) {
            const auto& b = report.best_cell();
            row[1] = csv_real(b.params.a);
            row[2] = csv_real(b.params.b);
            row[3] = csv_real(b.worst_crb->sqrt_deg());
            row[4] = csv_real(b.worst_crb->variance_rad2);
            row[5] = csv_real(b.worst_angle->deg());
        }
        row[6] = csv_real(report.feasible_fraction());
        if (report.least_violating) {
            const auto& lv = report.cells[*report.least_violating];
            row[7] = csv_real(lv.params.a);
            row[8] = csv_real(lv.params.b);
            row[9] = csv_real(lv.max_sidelobe_scc);
        }
        csv.row(row);
        out.files.push_back(csv.path());
    }
    if (report.best) {
        const auto& b = report.best_cell();
        out.summary = fmt::format("best cell {} worst-case CRB {} deg at {} deg; feasible fraction {}",
                                  params_text(b.params), b.worst_crb->sqrt_deg(), b.worst_angle->deg(),
                                  report.feasible_fraction());
    } else {
        out.summary = "infeasible region: no (a, b) cell satisfies the constraints";
        if (report.least_violating)
            out.summary += fmt::format("; least violating {} with max sidelobe SCC {}",
                                       params_text(report.cells[*report.least_violating].params),
                                       report.cells[*report.least_violating].max_sidelobe_scc);
    }
    return out;
}

CommandOutput cmd_optimize(const RunConfig& cfg)
{
    const auto scenario = cfg.resolved_scenario();
    const auto region = cfg.region.build();
    const auto report = optimize_placement(cfg.resolved_grid(), region, scenario, eval_options(cfg));

    CommandOutput out;
    CsvWriter csv(fs::path(cfg.out_dir) / "optimize.csv", meta_for("optimize", cfg, {"apv.selectors"}),
                  {"status", "a_lambda", "b_lambda", "positions", "worst_crb_deg", "worst_crb_rad2", "worst_angle_deg",
                   "max_sidelobe_scc", "feasible_fraction"});
    if (report.best) {
        const auto& b = report.best_cell();
        const auto apv = symmetric_apv(b.params, scenario);
        csv.row({"ok", csv_real(b.params.a), csv_real(b.params.b), csv_text(format_positions(apv.positions())),
                 csv_real(b.worst_crb->sqrt_deg()), csv_real(b.worst_crb->variance_rad2),
                 csv_real(b.worst_angle->deg()), csv_real(b.max_sidelobe_scc), csv_real(report.feasible_fraction())});
        out.summary = fmt::format("optimal APV [{}] ({}) worst-case CRB {} deg", format_positions(apv.positions()),
                                  params_text(b.params), b.worst_crb->sqrt_deg());
    } else {
        std::vector<std::string> row(9);
        row[0] = "infeasible";
        if (report.least_violating) {
            const auto& lv = report.cells[*report.least_violating];
            row[1] = csv_real(lv.params.a);
            row[2] = csv_real(lv.params.b);
            row[7] = csv_real(lv.max_sidelobe_scc);
        }
        row[8] = csv_real(report.feasible_fraction());
        csv.row(row);
        out.summary = "infeasible region: no (a, b) cell satisfies the constraints";
    }
    out.files.push_back(csv.path());
    return out;
}

CommandOutput cmd_scc_profile(const RunConfig& cfg)
{
    const auto scenario = cfg.resolved_scenario();
    const auto region = cfg.region.build();
    CommandOutput out;
    for (std::size_t i = 0; i < cfg.apvs.size(); ++i) {
        const auto apv = resolve_apv(cfg.apvs[i], i, cfg);
        const auto profile = scc_profile(apv.positions, region, scenario);
        const auto check = scc_feasible(apv.positions, region, scenario);
        auto meta = meta_for("scc-profile", cfg, {"apv.selectors"});
        meta.extra = {
            "apv: " + format_positions(apv.positions),
            fmt::format("beamwidth_deg: {}{}", profile.beamwidth.width_deg,
                        profile.beamwidth.full_domain ? " (full domain)" : ""),
            fmt::format("max_sidelobe_scc: {}; feasible: {}", check.max_sidelobe, csv_bool(check.feasible)),
        };
        CsvWriter csv(fs::path(cfg.out_dir) / ("scc_profile_" + apv.label + ".csv"), meta,
                      {"theta_deg", "scc_mag", "in_mainlobe"});
        for (std::size_t k = 0; k < profile.angles.size(); ++k)
            csv.row({csv_real(profile.angles[k].deg()), csv_real(profile.values[k]), csv_bool(profile.in_mainlobe[k])});
        out.files.push_back(csv.path());
        out.summary += fmt::format("{}: max sidelobe SCC {} ({})\n", apv.label, check.max_sidelobe,
                                   check.feasible ? "feasible" : "infeasible");
    }
    return out;
}

CommandOutput cmd_crb_profile(const RunConfig& cfg)
{
    const auto scenario = cfg.resolved_scenario();
    const auto region = cfg.region.build();
    const double lo = std::isnan(cfg.profile_min_deg) ? region.min_deg() : cfg.profile_min_deg;
    const double hi = std::isnan(cfg.profile_max_deg) ? region.max_deg() : cfg.profile_max_deg;
    const auto n = static_cast<long>(std::floor((hi - lo) / cfg.profile_step_deg + 1e-9));

    CommandOutput out;
    for (std::size_t i = 0; i < cfg.apvs.size(); ++i) {
        const auto apv = resolve_apv(cfg.apvs[i], i, cfg);
        const auto f = optimal_precoder(region.center, apv.positions, PowerAllocation(scenario.gamma), scenario);
        auto meta = meta_for("crb-profile", cfg, {"apv.selectors"});
        meta.extra = {"apv: " + format_positions(apv.positions),
                      fmt::format("precoder matched to theta_c = {} deg", region.center.deg())};
        CsvWriter csv(fs::path(cfg.out_dir) / ("crb_profile_" + apv.label + ".csv"), meta,
                      {"theta_deg", "crb_rad2", "crb_deg", "error"});
        std::size_t failures = 0;
        for (long k = 0; k <= n; ++k) {
            const Angle theta = Angle::degrees(lo + static_cast<double>(k) * cfg.profile_step_deg);
            try {
                const auto crb = crb_general(apv.positions, f, theta, scenario);
                csv.row({csv_real(theta.deg()), csv_real(crb.variance_rad2), csv_real(crb.sqrt_deg()), ""});
            } catch (const std::exception& e) {
                ++failures;
                csv.row({csv_real(theta.deg()), "", "", csv_text(e.what())});
            }
        }
        if (failures)
            out.exit_code = kExitPartialFailure;
        out.files.push_back(csv.path());
        out.summary += fmt::format("{}: CRB at theta_c {} deg{}\n", apv.label,
                                   crb_general(apv.positions, f, region.center, scenario).sqrt_deg(),
                                   failures ? fmt::format(" ({} rows failed)", failures) : "");
    }
    return out;
}

CommandOutput cmd_sweep(const RunConfig& cfg)
{
    const auto scenario = cfg.resolved_scenario();
    SweepOptions opts;
    opts.region_step_deg = cfg.region.grid_step_deg;
    opts.kappa_scc = cfg.region.kappa_scc;
    opts.beamwidth_step_deg = cfg.region.beamwidth_step_deg;
    opts.half_power = cfg.region.half_power;
    opts.eval = eval_options(cfg);
    const auto rows = sweep_region_size(cfg.sweep_spans_deg, Angle::degrees(cfg.region.center_deg),
                                        cfg.resolved_grid(), scenario, opts);

    CommandOutput out;
    auto meta = meta_for("sweep", cfg, {"apv.selectors"});
    for (const auto& row : rows) {
        meta.extra.push_back(row.opt_params ? fmt::format("opt(span={}): {}", row.span_deg, params_text(*row.opt_params))
                                            : fmt::format("opt(span={}): infeasible", row.span_deg));
    }
    if (const auto& pinned = rows.front().solution("opt_pinned"); !pinned.positions.empty())
        meta.extra.push_back("opt_pinned: " + format_positions(pinned.positions));
    CsvWriter csv(fs::path(cfg.out_dir) / "sweep.csv", meta, {"span_deg", "solution_name", "feasible", "worst_crb_deg"});
    for (const auto& row : rows) {
        for (const auto& s : row.solutions) {
            if (!s.error.empty() && s.error.find("infeasible") == std::string::npos)
                out.exit_code = kExitPartialFailure;
            csv.row({csv_real(row.span_deg), s.name, csv_bool(s.feasible),
                     s.worst_crb ? csv_real(s.worst_crb->sqrt_deg()) : std::string()});
        }
        const auto& opt = row.solution("opt");
        out.summary += fmt::format("span {} deg: opt {} worst-case CRB {} deg\n", row.span_deg,
                                   row.opt_params ? params_text(*row.opt_params) : "infeasible",
                                   opt.worst_crb ? csv_real(opt.worst_crb->sqrt_deg()) : "-");
    }
    out.files.push_back(csv.path());
    return out;
}

CommandOutput cmd_simulate(const RunConfig& cfg)
{
    const auto base = cfg.resolved_scenario();
    const auto region = cfg.region.build();
    CommandOutput out;

    auto summary_meta = meta_for("simulate", cfg);
    CsvWriter summary(fs::path(cfg.out_dir) / "simulate_summary.csv", summary_meta,
                      {"apv", "snr_db", "trials", "seed", "rmse_deg", "rmse_se_deg", "sqrt_crb_deg", "ratio",
                       "boundary_hits", "error"});
    for (std::size_t i = 0; i < cfg.apvs.size(); ++i) {
        const auto apv = resolve_apv(cfg.apvs[i], i, cfg);
        for (double snr_db : cfg.snr_list_db) {
            ScenarioConfig scenario = base;
            scenario.snr_linear = std::pow(10.0, snr_db / 10.0);
            const std::string snr_text = csv_real(snr_db);
            try {
                const auto f =
                    optimal_precoder(region.center, apv.positions, PowerAllocation(scenario.gamma), scenario);
                const Beamwidth bw = half_power_beamwidth(apv.positions, region.center, region.beamwidth_step_deg,
                                                          scenario, region.half_power);
                const double margin = (bw.full_domain ? 180.0 : bw.width_deg) * cfg.estimation_margin_bw;
                MonteCarloSpec spec;
                spec.theta_true = region.center;
                spec.trials = cfg.trials;
                spec.base_seed = cfg.seed;
                spec.num_pilots = cfg.num_pilots;
                spec.search.min_deg = std::max(-kMaxAbsAngleDeg, region.min_deg() - margin);
                spec.search.max_deg = std::min(kMaxAbsAngleDeg, region.max_deg() + margin);
                spec.search.step_deg = cfg.estimation_step_deg;
                spec.threads = cfg.threads;
                const auto result = run_monte_carlo(apv.positions, f, spec, scenario);

                auto meta = meta_for("simulate", cfg, {"apv.selectors"});
                meta.extra = {"apv: " + format_positions(apv.positions),
                              fmt::format("snr_db: {}; estimation grid [{}, {}] step {}", snr_db, spec.search.min_deg,
                                          spec.search.max_deg, spec.search.step_deg)};
                CsvWriter csv(fs::path(cfg.out_dir) / sanitize(fmt::format("simulate_{}_{}dB.csv", apv.label, snr_text)),
                              meta, {"trial", "seed", "theta_true_deg", "theta_hat_deg", "error_deg"});
                std::size_t boundary = 0;
                for (const auto& t : result.trials) {
                    boundary += t.boundary ? 1 : 0;
                    csv.row({std::to_string(t.trial), std::to_string(t.seed), csv_real(result.theta_true_deg),
                             csv_real(t.theta_hat_deg), csv_real(t.error_deg)});
                }
                csv.comment(fmt::format("summary: rmse_deg={}, sqrt_crb_deg={}", result.rmse_deg, result.sqrt_crb_deg));
                out.files.push_back(csv.path());
                summary.row({apv.label, snr_text, std::to_string(cfg.trials), std::to_string(cfg.seed),
                             csv_real(result.rmse_deg), csv_real(result.rmse_std_error_deg),
                             csv_real(result.sqrt_crb_deg), csv_real(result.ratio()), std::to_string(boundary), ""});
                out.summary += fmt::format("{} @ {} dB: RMSE {} deg, sqrt(CRB) {} deg, ratio {}\n", apv.label, snr_text,
                                           result.rmse_deg, result.sqrt_crb_deg, result.ratio());
            } catch (const EvaluationError& e) {
                out.exit_code = kExitPartialFailure;
                summary.row({apv.label, snr_text, std::to_string(cfg.trials), std::to_string(cfg.seed), "", "", "", "",
                             "", csv_text(e.what())});
            }
        }
    }
    out.files.insert(out.files.begin(), summary.path());
    return out;
}

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {"crb-map", "scc-profile", "crb-profile", "sweep", "simulate",
                                                   "optimize"};
    return names;
}

CommandOutput run_command(const std::string& name, const RunConfig& cfg)
{
    cfg.validate();
    fs::create_directories(cfg.out_dir);
    if (name == "crb-map")
        return cmd_crb_map(cfg);
    if (name == "scc-profile")
        return cmd_scc_profile(cfg);
    if (name == "crb-profile")
        return cmd_crb_profile(cfg);
    if (name == "sweep")
        return cmd_sweep(cfg);
    if (name == "simulate")
        return cmd_simulate(cfg);
    if (name == "optimize")
        return cmd_optimize(cfg);
    throw ConfigError(fmt::format("unknown command '{}'", name));
}

} // namespace maplace
