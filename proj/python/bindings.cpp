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

#include <cmath>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maplace/commands.hpp"
#include "maplace/crb.hpp"
#include "maplace/errors.hpp"
#include "maplace/geometry.hpp"
#include "maplace/optimizer.hpp"
#include "maplace/scc.hpp"
#include "maplace/simulate.hpp"

namespace py = pybind11;
using namespace maplace;

namespace {

std::vector<double> to_vector(const Apv& apv) { return {apv.positions().begin(), apv.positions().end()}; }

HalfPowerCriterion parse_criterion(const std::string& name)
{
    if (name == "power")
        return HalfPowerCriterion::power;
    if (name != "amplitude")
        throw ConfigError("half_power must be 'amplitude' or 'power'");
    return HalfPowerCriterion::amplitude;
}

UncertaintyRegion make_region(double min_deg, double max_deg, double center_deg, double step_deg, double kappa_scc,
                              const std::string& half_power)
{
    auto region = UncertaintyRegion::from_bounds(min_deg, max_deg, center_deg, step_deg, kappa_scc);
    region.half_power = parse_criterion(half_power);
    return region;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cramer-Rao bounds and robust movable-antenna placement for AoD estimation";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
    py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init([](int num_elements, double aperture, double min_spacing, double wavelength, double snr_linear,
                         double gamma) {
                 ScenarioConfig cfg{num_elements, aperture, min_spacing, wavelength, snr_linear, gamma};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("num_elements") = 6, py::arg("aperture") = 10.0, py::arg("min_spacing") = 0.5,
             py::arg("wavelength") = 1.0, py::arg("snr_linear") = 1.0, py::arg("gamma") = 0.5)
        .def_readwrite("num_elements", &ScenarioConfig::num_elements)
        .def_readwrite("aperture", &ScenarioConfig::aperture)
        .def_readwrite("min_spacing", &ScenarioConfig::min_spacing)
        .def_readwrite("wavelength", &ScenarioConfig::wavelength)
        .def_readwrite("snr_linear", &ScenarioConfig::snr_linear)
        .def_readwrite("gamma", &ScenarioConfig::gamma)
        .def("__repr__", [](const ScenarioConfig& c) {
            return "ScenarioConfig(num_elements=" + std::to_string(c.num_elements) +
                   ", aperture=" + std::to_string(c.aperture) + ", min_spacing=" + std::to_string(c.min_spacing) +
                   ", snr_linear=" + std::to_string(c.snr_linear) + ", gamma=" + std::to_string(c.gamma) + ")";
        });

    // Angles are degrees on the Python side.
    m.def("steering_vector",
          [](double theta_deg, const std::vector<double>& r, const ScenarioConfig& cfg) {
              return steering_vector(Angle::degrees(theta_deg), r, cfg);
          },
          py::arg("theta_deg"), py::arg("positions"), py::arg("cfg") = ScenarioConfig{});
    m.def("steering_derivative",
          [](double theta_deg, const std::vector<double>& r, const ScenarioConfig& cfg) {
              return steering_derivative(Angle::degrees(theta_deg), r, cfg);
          },
          py::arg("theta_deg"), py::arg("positions"), py::arg("cfg") = ScenarioConfig{},
          "Derivative with respect to theta in radians.");

    m.def("symmetric_apv", [](double a, double b, const ScenarioConfig& cfg) { return to_vector(symmetric_apv({a, b}, cfg)); },
          py::arg("a"), py::arg("b"), py::arg("cfg") = ScenarioConfig{});
    m.def("maxvar_apv", [](const ScenarioConfig& cfg) { return to_vector(maxvar_apv(cfg)); },
          py::arg("cfg") = ScenarioConfig{});
    m.def("ufa_apv", [](const ScenarioConfig& cfg) { return to_vector(ufa_apv(cfg)); }, py::arg("cfg") = ScenarioConfig{});
    m.def("uhw_apv", [](const ScenarioConfig& cfg) { return to_vector(uhw_apv(cfg)); }, py::arg("cfg") = ScenarioConfig{});
    m.def("position_moment", [](const std::vector<double>& r) { return position_moment(r); });

    m.def("optimal_precoder",
          [](double theta_deg, const std::vector<double>& r, double gamma, const ScenarioConfig& cfg) {
              return optimal_precoder(Angle::degrees(theta_deg), r, PowerAllocation(gamma), cfg).matrix();
          },
          py::arg("theta_deg"), py::arg("positions"), py::arg("gamma") = 0.5, py::arg("cfg") = ScenarioConfig{});

    m.def("crb_general",
          [](const std::vector<double>& r, const CMatrix& f, double theta_deg, const ScenarioConfig& cfg) {
              return crb_general(r, PrecodingMatrix(f), Angle::degrees(theta_deg), cfg).variance_rad2;
          },
          py::arg("positions"), py::arg("precoder"), py::arg("theta_deg"), py::arg("cfg") = ScenarioConfig{},
          "CRB in rad^2 for an arbitrary unit-power precoder.");
    m.def("crb_closed_form",
          [](const std::vector<double>& r, double theta_deg, const ScenarioConfig& cfg) {
              return crb_closed_form(r, Angle::degrees(theta_deg), cfg).variance_rad2;
          },
          py::arg("positions"), py::arg("theta_deg"), py::arg("cfg") = ScenarioConfig{});
    m.def("worst_case_crb",
          [](const std::vector<double>& r, double min_deg, double max_deg, double center_deg, double step_deg,
             const ScenarioConfig& cfg) {
              const auto w = worst_case_crb(r, make_region(min_deg, max_deg, center_deg, step_deg, 0.5, "amplitude"), cfg);
              return py::make_tuple(w.crb.variance_rad2, w.angle.deg());
          },
          py::arg("positions"), py::arg("min_deg"), py::arg("max_deg"), py::arg("center_deg"),
          py::arg("step_deg") = 0.1, py::arg("cfg") = ScenarioConfig{},
          "Returns (worst CRB in rad^2, attaining angle in degrees).");

    m.def("scc",
          [](double theta_i_deg, double theta_j_deg, const std::vector<double>& r, const ScenarioConfig& cfg) {
              return scc(Angle::degrees(theta_i_deg), Angle::degrees(theta_j_deg), r, cfg);
          },
          py::arg("theta_i_deg"), py::arg("theta_j_deg"), py::arg("positions"), py::arg("cfg") = ScenarioConfig{});
    m.def("half_power_beamwidth",
          [](const std::vector<double>& r, double center_deg, double fine_step_deg, const std::string& half_power,
             const ScenarioConfig& cfg) {
              const auto bw =
                  half_power_beamwidth(r, Angle::degrees(center_deg), fine_step_deg, cfg, parse_criterion(half_power));
              return py::make_tuple(bw.width_deg, bw.full_domain);
          },
          py::arg("positions"), py::arg("center_deg"), py::arg("fine_step_deg") = 0.01,
          py::arg("half_power") = "amplitude", py::arg("cfg") = ScenarioConfig{});
    m.def("scc_feasible",
          [](const std::vector<double>& r, double min_deg, double max_deg, double center_deg, double kappa_scc,
             double step_deg, const std::string& half_power, const ScenarioConfig& cfg) {
              const auto check =
                  scc_feasible(r, make_region(min_deg, max_deg, center_deg, step_deg, kappa_scc, half_power), cfg);
              return py::make_tuple(check.feasible, check.max_sidelobe);
          },
          py::arg("positions"), py::arg("min_deg"), py::arg("max_deg"), py::arg("center_deg"),
          py::arg("kappa_scc") = 0.5, py::arg("step_deg") = 0.1, py::arg("half_power") = "amplitude",
          py::arg("cfg") = ScenarioConfig{}, "Returns (feasible, max sidelobe |SCC|).");

    m.def("optimize_placement",
          [](double min_deg, double max_deg, double center_deg, double kappa_scc, double grid_step,
             double region_step, unsigned threads, const ScenarioConfig& cfg) {
              const auto region = make_region(min_deg, max_deg, center_deg, region_step, kappa_scc, "amplitude");
              OptimizationReport report;
              {
                  py::gil_scoped_release release;
                  report = optimize_placement(GridSpec::full_box(cfg, grid_step), region, cfg, {threads, false});
              }
              py::list cells;
              for (const auto& c : report.cells) {
                  py::dict d;
                  d["a"] = c.params.a;
                  d["b"] = c.params.b;
                  d["feasible"] = c.feasible;
                  d["max_sidelobe_scc"] = c.geometry_feasible ? py::cast(c.max_sidelobe_scc) : py::none();
                  d["worst_crb_rad2"] = c.worst_crb ? py::cast(c.worst_crb->variance_rad2) : py::none();
                  d["worst_crb_deg"] = c.worst_crb ? py::cast(c.worst_crb->sqrt_deg()) : py::none();
                  cells.append(d);
              }
              py::dict out;
              out["cells"] = cells;
              out["feasible_fraction"] = report.feasible_fraction();
              if (report.best) {
                  const auto& b = report.best_cell();
                  out["best"] = py::make_tuple(b.params.a, b.params.b);
                  out["best_worst_crb_rad2"] = b.worst_crb->variance_rad2;
                  out["best_worst_crb_deg"] = b.worst_crb->sqrt_deg();
                  out["best_positions"] = to_vector(symmetric_apv(b.params, cfg));
              } else {
                  out["best"] = py::none();
              }
              return out;
          },
          py::arg("min_deg") = 0.0, py::arg("max_deg") = 20.0, py::arg("center_deg") = 10.0,
          py::arg("kappa_scc") = 0.5, py::arg("grid_step") = 0.05, py::arg("region_step") = 0.1,
          py::arg("threads") = 1u, py::arg("cfg") = ScenarioConfig{});

    m.def("sweep_region_size",
          [](const std::vector<double>& spans, double center_deg, double grid_step, const ScenarioConfig& cfg) {
              std::vector<SweepRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = sweep_region_size(spans, Angle::degrees(center_deg), GridSpec::full_box(cfg, grid_step), cfg);
              }
              py::list out;
              for (const auto& row : rows) {
                  for (const auto& s : row.solutions) {
                      py::dict d;
                      d["span_deg"] = row.span_deg;
                      d["solution"] = s.name;
                      d["feasible"] = s.feasible;
                      d["worst_crb_deg"] = s.worst_crb ? py::cast(s.worst_crb->sqrt_deg()) : py::none();
                      out.append(d);
                  }
              }
              return out;
          },
          py::arg("spans"), py::arg("center_deg") = 10.0, py::arg("grid_step") = 0.05,
          py::arg("cfg") = ScenarioConfig{});

    m.def("monte_carlo",
          [](const std::vector<double>& r, double theta_deg, double snr_db, std::size_t trials, std::uint64_t seed,
             double search_min_deg, double search_max_deg, double search_step_deg, ScenarioConfig cfg) {
              cfg.snr_linear = std::pow(10.0, snr_db / 10.0);
              const auto f = optimal_precoder(Angle::degrees(theta_deg), r, PowerAllocation(cfg.gamma), cfg);
              MonteCarloSpec spec;
              spec.theta_true = Angle::degrees(theta_deg);
              spec.trials = trials;
              spec.base_seed = seed;
              spec.search = {search_min_deg, search_max_deg, search_step_deg};
              MonteCarloResult result;
              {
                  py::gil_scoped_release release;
                  result = run_monte_carlo(r, f, spec, cfg);
              }
              std::vector<double> errors;
              for (const auto& t : result.trials)
                  errors.push_back(t.error_deg);
              py::dict out;
              out["rmse_deg"] = result.rmse_deg;
              out["sqrt_crb_deg"] = result.sqrt_crb_deg;
              out["rmse_std_error_deg"] = result.rmse_std_error_deg;
              out["errors_deg"] = errors;
              return out;
          },
          py::arg("positions"), py::arg("theta_deg"), py::arg("snr_db"), py::arg("trials") = 1000,
          py::arg("seed") = 1, py::arg("search_min_deg") = 4.7, py::arg("search_max_deg") = 15.3,
          py::arg("search_step_deg") = 0.05, py::arg("cfg") = ScenarioConfig{},
          "Matched-precoder ML estimation trials with the precoder steered at theta_deg.");

    m.def("run_command",
          [](const std::string& name, const std::map<std::string, std::string>& overrides) {
              RunConfig cfg;
              for (const auto& [key, value] : overrides)
                  set_config_value(cfg, key, value, "python");
              const auto result = run_command(name, cfg);
              std::vector<std::string> files;
              for (const auto& f : result.files)
                  files.push_back(f.string());
              return py::make_tuple(result.exit_code, files, result.summary);
          },
          py::arg("name"), py::arg("overrides") = std::map<std::string, std::string>{},
          "Runs a CLI subcommand in-process; overrides use section.key or flag names.");
}
