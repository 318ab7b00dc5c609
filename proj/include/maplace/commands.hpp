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

#include <filesystem>
#include <string>
#include <vector>

#include "maplace/config.hpp"
#include "maplace/geometry.hpp"

namespace maplace {

/// Exit status for a run where some rows carry an error column instead of values.
inline constexpr int kExitPartialFailure = 3;

struct CommandOutput {
    int exit_code = 0;
    std::vector<std::filesystem::path> files;
    std::string summary; // human-readable, printed by the CLI
};

struct ResolvedApv {
    std::string label; // used in output file names
    std::vector<double> positions;
};

/*!
 * Resolves an APV selector:
 *   maxvar | ufa | uhw            fixed placements
 *   opt                           optimum of the configured region
 *   opt:min:max:center            optimum of another region (same grid, step and threshold)
 *   pos:r1,r2,...                 explicit positions (validated against the scenario)
 * Throws ConfigError for unknown selectors and EvaluationError when an opt region is infeasible.
 */
ResolvedApv resolve_apv(const std::string& selector, std::size_t index, const RunConfig& cfg);

CommandOutput cmd_crb_map(const RunConfig& cfg);
CommandOutput cmd_optimize(const RunConfig& cfg);
CommandOutput cmd_scc_profile(const RunConfig& cfg);
CommandOutput cmd_crb_profile(const RunConfig& cfg);
CommandOutput cmd_sweep(const RunConfig& cfg);
CommandOutput cmd_simulate(const RunConfig& cfg);

/// Names accepted by run_command, in help order.
const std::vector<std::string>& command_names();

/// Validates cfg, creates the output directory, and dispatches by name.
CommandOutput run_command(const std::string& name, const RunConfig& cfg);

} // namespace maplace
