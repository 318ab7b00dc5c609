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

#include "maplace/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "maplace/errors.hpp"
#include "maplace/geometry.hpp"

namespace maplace {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ConfigError(fmt::format("expected a real number, got '{}'", text));
    return v;
}

template <class Int>
Int parse_int(std::string_view text)
{
    text = trim(text);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError(fmt::format("expected a non-negative integer, got '{}'", text));
    return v;
}

bool parse_bool(std::string_view text)
{
    std::string t(trim(text));
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "1" || t == "yes" || t == "on")
        return true;
    if (t == "false" || t == "0" || t == "no" || t == "off")
        return false;
    throw ConfigError(fmt::format("expected a boolean, got '{}'", text));
}

std::string fmt_real(double v) { return fmt::format("{}", v); }

std::string fmt_list(const std::vector<double>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + fmt_real(v[i]);
    return out;
}

std::vector<std::string> split_selectors(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto tok = trim(text.substr(start, end - start));
        if (!tok.empty())
            out.emplace_back(tok);
        start = end + 1;
    }
    return out;
}

ConfigKey real_key(std::string section, std::string key, std::string flag, std::string help,
                   double RunConfig::*group_field)
{
    return {std::move(section), std::move(key), std::move(flag), std::move(help),
            [group_field](RunConfig& c, std::string_view v) { c.*group_field = parse_real(v); },
            [group_field](const RunConfig& c) { return fmt_real(c.*group_field); }};
}

template <class Get, class Set>
ConfigKey make_key(std::string section, std::string key, std::string flag, std::string help, Set set, Get get)
{
    return {std::move(section), std::move(key), std::move(flag), std::move(help), std::move(set), std::move(get)};
}

std::vector<ConfigKey> build_keys()
{
    std::vector<ConfigKey> k;
    // scenario
    k.push_back(make_key("scenario", "num_elements", "num-elements", "number of antennas L",
        [](RunConfig& c, std::string_view v) { c.scenario.num_elements = parse_int<int>(v); },
        [](const RunConfig& c) { return std::to_string(c.scenario.num_elements); }));
    k.push_back(make_key("scenario", "aperture", "aperture", "segment length D (wavelength units)",
        [](RunConfig& c, std::string_view v) { c.scenario.aperture = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.scenario.aperture); }));
    k.push_back(make_key("scenario", "min_spacing", "min-spacing", "minimum inter-element spacing d",
        [](RunConfig& c, std::string_view v) { c.scenario.min_spacing = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.scenario.min_spacing); }));
    k.push_back(make_key("scenario", "wavelength", "wavelength", "carrier wavelength",
        [](RunConfig& c, std::string_view v) { c.scenario.wavelength = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.scenario.wavelength); }));
    k.push_back(real_key("scenario", "snr_db", "snr-db", "SNR = K P rho^2 / sigma^2 in dB", &RunConfig::snr_db));
    k.push_back(make_key("scenario", "gamma", "gamma", "power fraction of the directional beam",
        [](RunConfig& c, std::string_view v) { c.scenario.gamma = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.scenario.gamma); }));
    // region
    k.push_back(make_key("region", "min_deg", "region-min", "lower edge of the uncertainty region",
        [](RunConfig& c, std::string_view v) { c.region.min_deg = parse_real(v); c.region.span_deg.reset(); },
        [](const RunConfig& c) { return fmt_real(c.region.span_deg ? c.region.center_deg - *c.region.span_deg / 2.0 : c.region.min_deg); }));
    k.push_back(make_key("region", "max_deg", "region-max", "upper edge of the uncertainty region",
        [](RunConfig& c, std::string_view v) { c.region.max_deg = parse_real(v); c.region.span_deg.reset(); },
        [](const RunConfig& c) { return fmt_real(c.region.span_deg ? c.region.center_deg + *c.region.span_deg / 2.0 : c.region.max_deg); }));
    k.push_back(make_key("region", "center_deg", "region-center", "region center theta_c",
        [](RunConfig& c, std::string_view v) { c.region.center_deg = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.region.center_deg); }));
    k.push_back(make_key("region", "span_deg", "region-span", "region span; overrides min/max around the center",
        [](RunConfig& c, std::string_view v) { c.region.span_deg = parse_real(v); },
        [](const RunConfig& c) { return c.region.span_deg ? fmt_real(*c.region.span_deg) : std::string(); }));
    k.push_back(make_key("region", "grid_step_deg", "region-step", "region angle grid step",
        [](RunConfig& c, std::string_view v) { c.region.grid_step_deg = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.region.grid_step_deg); }));
    k.push_back(make_key("region", "kappa_scc", "kappa-scc", "SCC threshold (1 disables the constraint)",
        [](RunConfig& c, std::string_view v) { c.region.kappa_scc = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.region.kappa_scc); }));
    k.push_back(make_key("region", "beamwidth_step_deg", "beamwidth-step", "fine scan step for the beamwidth",
        [](RunConfig& c, std::string_view v) { c.region.beamwidth_step_deg = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.region.beamwidth_step_deg); }));
    k.push_back(make_key("region", "half_power", "half-power", "main-lobe cut: amplitude (|SCC|=1/2) or power (|SCC|^2=1/2)",
        [](RunConfig& c, std::string_view v) {
            const auto t = trim(v);
            if (t == "amplitude")
                c.region.half_power = HalfPowerCriterion::amplitude;
            else if (t == "power")
                c.region.half_power = HalfPowerCriterion::power;
            else
                throw ConfigError(fmt::format("expected 'amplitude' or 'power', got '{}'", t));
        },
        [](const RunConfig& c) {
            return std::string(c.region.half_power == HalfPowerCriterion::power ? "power" : "amplitude");
        }));
    // grid
    auto bound = [](std::string key, std::string flag, double GridSpec::*field) {
        return make_key("grid", key, flag, "(a, b) grid bound in wavelength units",
            [field](RunConfig& c, std::string_view v) {
                const double value = parse_real(v);
                if (c.grid_full_box)
                    c.grid = GridSpec::full_box(c.scenario, c.grid.step);
                c.grid_full_box = false;
                c.grid.*field = value;
            },
            [field](const RunConfig& c) { return fmt_real(c.resolved_grid().*field); });
    };
    k.push_back(bound("a_min", "a-min", &GridSpec::a_min));
    k.push_back(bound("a_max", "a-max", &GridSpec::a_max));
    k.push_back(bound("b_min", "b-min", &GridSpec::b_min));
    k.push_back(bound("b_max", "b-max", &GridSpec::b_max));
    k.push_back(make_key("grid", "step", "grid-step", "(a, b) grid step in wavelength units",
        [](RunConfig& c, std::string_view v) { c.grid.step = parse_real(v); },
        [](const RunConfig& c) { return fmt_real(c.grid.step); }));
    // output
    k.push_back(make_key("output", "directory", "out", "output directory",
        [](RunConfig& c, std::string_view v) { c.out_dir = std::string(trim(v)); },
        [](const RunConfig& c) { return c.out_dir; }));
    k.push_back(make_key("output", "timestamp", "timestamp", "write a '# generated:' line to CSVs",
        [](RunConfig& c, std::string_view v) { c.timestamp = parse_bool(v); },
        [](const RunConfig& c) { return std::string(c.timestamp ? "true" : "false"); }));
    k.push_back(make_key("output", "diagnostics", "diagnostics", "evaluate CRB on SCC-infeasible cells too",
        [](RunConfig& c, std::string_view v) { c.diagnostics = parse_bool(v); },
        [](const RunConfig& c) { return std::string(c.diagnostics ? "true" : "false"); }));
    k.push_back(make_key("output", "threads", "threads", "worker threads (0 = all cores)",
        [](RunConfig& c, std::string_view v) { c.threads = parse_int<unsigned>(v); },
        [](const RunConfig& c) { return std::to_string(c.threads); }));
    // APV selection
    k.push_back(make_key("apv", "selectors", "apvs",
        "';'-separated: maxvar | ufa | uhw | opt | opt:min:max:center | pos:r1,r2,...",
        [](RunConfig& c, std::string_view v) { c.apvs = split_selectors(v); },
        [](const RunConfig& c) {
            std::string out;
            for (std::size_t i = 0; i < c.apvs.size(); ++i)
                out += (i ? ";" : "") + c.apvs[i];
            return out;
        }));
    // sweep
    k.push_back(make_key("sweep", "spans", "spans", "comma-separated region spans in degrees",
        [](RunConfig& c, std::string_view v) { c.sweep_spans_deg = parse_real_list(v); },
        [](const RunConfig& c) { return fmt_list(c.sweep_spans_deg); }));
    // profile
    k.push_back(real_key("profile", "min_deg", "profile-min", "crb-profile lower angle (default region min)",
                         &RunConfig::profile_min_deg));
    k.push_back(real_key("profile", "max_deg", "profile-max", "crb-profile upper angle (default region max)",
                         &RunConfig::profile_max_deg));
    k.push_back(real_key("profile", "step_deg", "profile-step", "crb-profile angle step", &RunConfig::profile_step_deg));
    // simulate
    k.push_back(make_key("simulate", "trials", "trials", "Monte-Carlo trials per APV and SNR",
        [](RunConfig& c, std::string_view v) { c.trials = parse_int<std::size_t>(v); },
        [](const RunConfig& c) { return std::to_string(c.trials); }));
    k.push_back(make_key("simulate", "snr_list", "snr-list", "comma-separated SNRs in dB",
        [](RunConfig& c, std::string_view v) { c.snr_list_db = parse_real_list(v); },
        [](const RunConfig& c) { return fmt_list(c.snr_list_db); }));
    k.push_back(make_key("simulate", "seed", "seed", "base RNG seed",
        [](RunConfig& c, std::string_view v) { c.seed = parse_int<std::uint64_t>(v); },
        [](const RunConfig& c) { return std::to_string(c.seed); }));
    k.push_back(make_key("simulate", "num_pilots", "num-pilots", "pilot length K",
        [](RunConfig& c, std::string_view v) { c.num_pilots = parse_int<std::size_t>(v); },
        [](const RunConfig& c) { return std::to_string(c.num_pilots); }));
    k.push_back(real_key("simulate", "margin_beamwidths", "margin-beamwidths",
                         "estimation grid margin around the region, in beamwidths", &RunConfig::estimation_margin_bw));
    k.push_back(real_key("simulate", "grid_step_deg", "estimation-step", "coarse ML search step",
                         &RunConfig::estimation_step_deg));
    return k;
}

} // namespace

UncertaintyRegion RegionSpec::build() const
{
    const double lo = span_deg ? center_deg - *span_deg / 2.0 : min_deg;
    const double hi = span_deg ? center_deg + *span_deg / 2.0 : max_deg;
    auto region = UncertaintyRegion::from_bounds(lo, hi, center_deg, grid_step_deg, kappa_scc);
    if (!(beamwidth_step_deg > 0.0))
        throw ConfigError("beamwidth step must be > 0");
    region.beamwidth_step_deg = beamwidth_step_deg;
    region.half_power = half_power;
    return region;
}

ScenarioConfig RunConfig::resolved_scenario() const
{
    ScenarioConfig s = scenario;
    s.snr_linear = std::pow(10.0, snr_db / 10.0);
    return s;
}

GridSpec RunConfig::resolved_grid() const
{
    if (!grid_full_box)
        return grid;
    return GridSpec::full_box(scenario, grid.step);
}

void RunConfig::validate() const
{
    auto fail = [this](std::initializer_list<const char*> keys, const std::string& msg) {
        for (const char* key : keys) {
            auto it = origins.find(key);
            if (it != origins.end())
                throw ConfigError(fmt::format("{}: {}: {}", it->second, key, msg));
        }
        throw ConfigError(fmt::format("{}: {}", *keys.begin(), msg));
    };
    auto guard = [&](std::initializer_list<const char*> keys, auto&& fn) {
        try {
            fn();
        } catch (const ConfigError& e) {
            fail(keys, e.what());
        } catch (const ConstraintError& e) {
            fail(keys, e.what());
        }
    };

    guard({"scenario.num_elements", "scenario.aperture", "scenario.min_spacing", "scenario.wavelength",
           "scenario.snr_db", "scenario.gamma"},
          [&] { resolved_scenario().validate(); });
    guard({"region.min_deg", "region.max_deg", "region.center_deg", "region.span_deg", "region.grid_step_deg",
           "region.kappa_scc", "region.beamwidth_step_deg"},
          [&] { (void)region.build(); });
    guard({"grid.a_min", "grid.a_max", "grid.b_min", "grid.b_max", "grid.step"},
          [&] { resolved_grid().validate(scenario); });
    if (apvs.empty())
        fail({"apv.selectors"}, "at least one APV selector is required");
    if (sweep_spans_deg.empty() || std::any_of(sweep_spans_deg.begin(), sweep_spans_deg.end(),
                                               [](double s) { return !(s >= 0.0); }))
        fail({"sweep.spans"}, "spans must be a nonempty list of values >= 0");
    if (!(profile_step_deg > 0.0))
        fail({"profile.step_deg"}, "must be > 0");
    if (!std::isnan(profile_min_deg) && !std::isnan(profile_max_deg) && profile_max_deg < profile_min_deg)
        fail({"profile.max_deg", "profile.min_deg"}, "max below min");
    if (trials == 0)
        fail({"simulate.trials"}, "must be >= 1");
    if (snr_list_db.empty())
        fail({"simulate.snr_list"}, "must list at least one SNR");
    if (num_pilots == 0)
        fail({"simulate.num_pilots"}, "must be >= 1");
    if (!(estimation_margin_bw >= 0.0))
        fail({"simulate.margin_beamwidths"}, "must be >= 0");
    if (!(estimation_step_deg > 0.0))
        fail({"simulate.grid_step_deg"}, "must be > 0");
}

std::string RunConfig::describe(const std::vector<std::string>& exclude) const
{
    std::string out;
    for (const auto& key : config_keys()) {
        const auto q = key.qualified();
        if (std::find(exclude.begin(), exclude.end(), q) != exclude.end())
            continue;
        if (!out.empty())
            out += "; ";
        out += q + "=" + key.get(*this);
    }
    return out;
}

const std::vector<ConfigKey>& config_keys()
{
    static const std::vector<ConfigKey> keys = build_keys();
    return keys;
}

const ConfigKey* find_config_key(std::string_view name)
{
    while (!name.empty() && name.front() == '-')
        name.remove_prefix(1);
    for (const auto& key : config_keys()) {
        if (name == key.qualified() || name == key.flag_name)
            return &key;
    }
    return nullptr;
}

void set_config_value(RunConfig& cfg, std::string_view name, std::string_view value, std::string origin)
{
    const ConfigKey* key = find_config_key(name);
    if (!key)
        throw ConfigError(fmt::format("{}: unknown key '{}'", origin, name));
    try {
        key->set(cfg, value);
    } catch (const ConfigError& e) {
        throw ConfigError(fmt::format("{}: {}: {}", origin, key->qualified(), e.what()));
    }
    cfg.origins[key->qualified()] = std::move(origin);
}

void apply_config_text(RunConfig& cfg, std::string_view text, const std::string& source)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = fmt::format("{}:{}", source, lineno);
        auto body = trim(line);
        if (body.empty() || body.front() == '#' || body.front() == ';')
            continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ConfigError(fmt::format("{}: malformed section header '{}'", where, body));
            section = std::string(trim(body.substr(1, body.size() - 2)));
            const bool known = std::any_of(config_keys().begin(), config_keys().end(),
                                           [&](const ConfigKey& k) { return k.section == section; });
            if (!known)
                throw ConfigError(fmt::format("{}: unknown section [{}]", where, section));
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(fmt::format("{}: expected 'key = value', got '{}'", where, body));
        if (section.empty())
            throw ConfigError(fmt::format("{}: key outside of a [section]", where));
        const auto key = std::string(trim(body.substr(0, eq)));
        const auto value = trim(body.substr(eq + 1));
        const std::string qualified = section + "." + key;
        const ConfigKey* entry = find_config_key(qualified);
        if (!entry || entry->qualified() != qualified)
            throw ConfigError(fmt::format("{}: unknown key '{}' in [{}]", where, key, section));
        set_config_value(cfg, qualified, value, where);
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(fmt::format("cannot open config file '{}'", path));
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str(), path);
}

void apply_region_triplet(RunConfig& cfg, std::string_view text, const std::string& origin)
{
    std::vector<double> parts;
    std::size_t start = 0;
    try {
        while (start <= text.size()) {
            auto end = text.find(':', start);
            if (end == std::string_view::npos)
                end = text.size();
            parts.push_back(parse_real(text.substr(start, end - start)));
            start = end + 1;
        }
    } catch (const ConfigError& e) {
        throw ConfigError(fmt::format("{}: region: {}", origin, e.what()));
    }
    if (parts.size() != 3)
        throw ConfigError(fmt::format("{}: region must be min_deg:max_deg:center_deg, got '{}'", origin, text));
    cfg.region.min_deg = parts[0];
    cfg.region.max_deg = parts[1];
    cfg.region.center_deg = parts[2];
    cfg.region.span_deg.reset();
    for (const char* key : {"region.min_deg", "region.max_deg", "region.center_deg"})
        cfg.origins[key] = origin;
}

std::vector<double> parse_real_list(std::string_view text)
{
    return parse_positions(text);
}

} // namespace maplace
