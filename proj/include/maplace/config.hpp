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

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "maplace/optimizer.hpp"
#include "maplace/region.hpp"

namespace maplace {

struct RegionSpec {
    double min_deg = 0.0;
    double max_deg = 20.0;
    double center_deg = 10.0;
    std::optional<double> span_deg; // when set, min/max are center -/+ span/2
    double grid_step_deg = 0.1;
    double kappa_scc = 0.5;
    double beamwidth_step_deg = 0.01;
    HalfPowerCriterion half_power = HalfPowerCriterion::amplitude;

    UncertaintyRegion build() const;
};

/*!
 * Fully resolved run configuration.
 *
 * Sources are applied in order: built-in defaults (the L = 6, D = 10, d = 1/2 setup with
 * region [0, 20] deg centered at 10 deg), an optional config file, then command-line flags.
 * The origin of every explicitly set key is remembered so validation errors point at it.
 */
struct RunConfig {
    ScenarioConfig scenario;
    double snr_db = 0.0;
    RegionSpec region;
    GridSpec grid;
    bool grid_full_box = true; // grid bounds follow the scenario's parameter box unless set explicitly

    std::string out_dir = "out";
    bool timestamp = true;
    bool diagnostics = false;
    unsigned threads = 1;

    std::vector<std::string> apvs = {"maxvar", "ufa", "uhw", "opt"};
    std::vector<double> sweep_spans_deg = {0, 2, 5, 8, 10, 15, 20, 25, 30, 35, 40};

    // crb-profile angle range; NaN bounds follow the region
    double profile_min_deg = std::numeric_limits<double>::quiet_NaN();
    double profile_max_deg = std::numeric_limits<double>::quiet_NaN();
    double profile_step_deg = 0.1;

    std::size_t trials = 1000;
    std::vector<double> snr_list_db = {0, 10, 20};
    std::uint64_t seed = 1;
    std::size_t num_pilots = 16;
    double estimation_margin_bw = 1.0; // estimation grid = region widened by this many beamwidths per side
    double estimation_step_deg = 0.05;

    std::map<std::string, std::string> origins; // "section.key" -> "file:line" or "--flag"

    /// Scenario with snr_linear resolved from snr_db.
    ScenarioConfig resolved_scenario() const;
    GridSpec resolved_grid() const;

    /// Throws ConfigError naming the offending key and where it was set.
    void validate() const;

    /// "section.key=value;..." for every key, in table order.
    std::string describe(const std::vector<std::string>& exclude = {}) const;
};

struct ConfigKey {
    std::string section;
    std::string key;
    std::string flag_name; // command-line spelling without the leading dashes
    std::string help;
    std::function<void(RunConfig&, std::string_view)> set;
    std::function<std::string(const RunConfig&)> get;

    std::string qualified() const { return section + "." + key; }
    /// Command-line flag, e.g. --snr-db for scenario.snr_db.
    std::string flag() const { return "--" + flag_name; }
};

const std::vector<ConfigKey>& config_keys();

/// Finds a key by "section.key", bare "key" or flag name (with or without leading dashes).
const ConfigKey* find_config_key(std::string_view name);

/// Sets one key; origin is recorded for error messages. Throws ConfigError on unknown key or bad value.
void set_config_value(RunConfig& cfg, std::string_view name, std::string_view value, std::string origin);

/*!
 * Parses flat key-value text with [section] headers.
 *
 *   # comment
 *   [scenario]
 *   snr_db = 10
 *
 * Errors carry "source:line:" prefixes.
 */
void apply_config_text(RunConfig& cfg, std::string_view text, const std::string& source);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Parses "min:max:center" (degrees) into the region.
void apply_region_triplet(RunConfig& cfg, std::string_view text, const std::string& origin);

std::vector<double> parse_real_list(std::string_view text);

} // namespace maplace
