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

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maplace/commands.hpp"
#include "maplace/config.hpp"
#include "maplace/errors.hpp"

int main(int argc, char** argv)
{
    using namespace maplace;

    CLI::App app{"Robust movable-antenna placement for angle-of-departure estimation"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path;
    std::string region_triplet;
    std::vector<std::string> sets;
    bool no_timestamp = false;
    app.add_option("--config", config_path, "flat key-value config file with [section] headers")
        ->check(CLI::ExistingFile);
    app.add_option("--region", region_triplet, "uncertainty region as min_deg:max_deg:center_deg");
    app.add_option("--set", sets, "override any key as section.key=value (repeatable)");
    app.add_flag("--no-timestamp", no_timestamp, "omit the '# generated:' line so reruns are byte-identical");

    std::map<std::string, std::optional<std::string>> flag_values;
    for (const auto& key : config_keys()) {
        auto& slot = flag_values[key.qualified()];
        app.add_option_function<std::string>(
               key.flag(), [&slot](const std::string& v) { slot = v; }, key.help + " [" + key.qualified() + "]")
            ->group("Config keys");
    }

    const std::map<std::string, std::string> descriptions = {
        {"crb-map", "worst-case CRB over the (a, b) grid with feasibility (per-cell CSV + summary)"},
        {"scc-profile", "|SCC(theta_c, theta, r)| over the region for the selected APVs"},
        {"crb-profile", "CRB(r, F*(theta_c, r); theta) over an angle range for the selected APVs"},
        {"sweep", "worst-case CRB versus region span for Opt-APV, MaxVar, UFA, UHW and the pinned Opt-APV"},
        {"simulate", "Monte-Carlo ML estimation RMSE versus sqrt(CRB)"},
        {"optimize", "robust optimal APV for the configured region"},
    };
    for (const auto& name : command_names())
        app.add_subcommand(name, descriptions.at(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    RunConfig cfg;
    try {
        if (!config_path.empty())
            apply_config_file(cfg, config_path);
        if (!region_triplet.empty())
            apply_region_triplet(cfg, region_triplet, "--region");
        for (const auto& key : config_keys()) {
            if (const auto& v = flag_values[key.qualified()])
                set_config_value(cfg, key.qualified(), *v, key.flag());
        }
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw ConfigError("--set expects section.key=value, got '" + s + "'");
            set_config_value(cfg, s.substr(0, eq), s.substr(eq + 1), "--set");
        }
        if (no_timestamp)
            cfg.timestamp = false;

        const std::string command = app.get_subcommands().front()->get_name();
        const auto result = run_command(command, cfg);
        std::cout << result.summary;
        if (!result.summary.empty() && result.summary.back() != '\n')
            std::cout << '\n';
        for (const auto& f : result.files)
            std::cout << "wrote " << f.string() << '\n';
        return result.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
