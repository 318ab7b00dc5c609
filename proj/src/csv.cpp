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

#include "maplace/csv.hpp"

#include <chrono>
#include <ctime>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "maplace/errors.hpp"

namespace maplace {

CsvWriter::CsvWriter(const std::filesystem::path& path, const CsvMeta& meta, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(header.size())
{
    if (!out_)
        throw ConfigError(fmt::format("cannot write '{}'", path.string()));
    out_ << "# maplace " << meta.command << '\n';
    if (meta.timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        out_ << fmt::format("# generated: {:%Y-%m-%dT%H:%M:%SZ}\n", fmt::gmtime(now));
    }
    out_ << "# config: " << meta.config << '\n';
    for (const auto& line : meta.extra)
        out_ << "# " << line << '\n';
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells)
{
    if (cells.size() != columns_)
        throw std::logic_error(fmt::format("CSV row has {} cells, header has {}", cells.size(), columns_));
    for (std::size_t i = 0; i < cells.size(); ++i)
        out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << '\n'; }

std::string csv_real(double v) { return fmt::format("{}", v); }

std::string csv_real(const std::optional<double>& v) { return v ? csv_real(*v) : std::string(); }

std::string csv_bool(bool v) { return v ? "1" : "0"; }

std::string csv_text(const std::string& v)
{
    if (v.find_first_of(",\"\n") == std::string::npos)
        return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"')
            out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + '"';
}

} // namespace maplace
