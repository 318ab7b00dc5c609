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
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace maplace {

/// Provenance written as '#' comment lines ahead of the header row.
struct CsvMeta {
    std::string command;
    std::string config;                  // resolved config, one line
    std::vector<std::string> extra;      // additional "# ..." lines (without the '#')
    bool timestamp = true;
};

/*!
 * Minimal CSV writer.
 *
 * Layout: "# maplace <command>", optional "# generated: <UTC time>", "# config: ...",
 * any extra comment lines, then the header row and data rows. Numbers use the shortest
 * round-trip representation so reruns produce byte-identical files.
 */
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const CsvMeta& meta, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& cells);
    void comment(const std::string& text);
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_;
};

std::string csv_real(double v);
std::string csv_real(const std::optional<double>& v);
std::string csv_bool(bool v);
/// Quotes a field when it contains a comma, quote or newline.
std::string csv_text(const std::string& v);

} // namespace maplace
