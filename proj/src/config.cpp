// SPDX-License-Identifier: Apache-2.0
//
// aerialris: placement, partitioning and power planning for aerial-RIS backhaul
// Copyright (C) 2026 The aerialris authors
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

#include "aerialris/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "aerialris/error.hpp"

namespace aerialris
{

namespace
{

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string &v)
{
    std::size_t used = 0;
    double d = 0.0;
    try
    {
        d = std::stod(v, &used);
    }
    catch (const std::exception &)
    {
        throw std::invalid_argument("expected a number, got '" + v + "'");
    }
    if (used != v.size() || !std::isfinite(d))
        throw std::invalid_argument("expected a number, got '" + v + "'");
    return d;
}

std::uint64_t to_uint(const std::string &v)
{
    std::uint64_t out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
        throw std::invalid_argument("expected a non-negative integer, got '" + v + "'");
    return out;
}

Vec2 to_vec2(const std::string &v)
{
    std::string s = v;
    for (char &c : s)
        if (c == ',')
            c = ' ';
    std::istringstream in(s);
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra))
        throw std::invalid_argument("expected two numbers 'x, y', got '" + v + "'");
    return {to_double(a), to_double(b)};
}

struct Key
{
    const char *unit;
    const char *def;
    std::function<void(RunConfig &, const std::string &)> set;
};

const std::map<std::string, Key> &keys()
{
    static const std::map<std::string, Key> k = {
        {"region_side", {"m", "500", [](RunConfig &c, const std::string &v) { c.scenario.region_side = to_double(v); }}},
        {"center", {"m, m", "1000, 0", [](RunConfig &c, const std::string &v) { c.scenario.center = to_vec2(v); }}},
        {"n_users", {"count", "100", [](RunConfig &c, const std::string &v) { c.scenario.n_users = to_uint(v); }}},
        {"m0", {"count", "8", [](RunConfig &c, const std::string &v) { c.scenario.m0 = to_uint(v); }}},
        {"n_elements", {"count", "300", [](RunConfig &c, const std::string &v) { c.scenario.ris.n_elements = to_uint(v); }}},
        {"element_spacing_norm", {"wavelengths", "0.1", [](RunConfig &c, const std::string &v) { c.scenario.ris.element_spacing_norm = to_double(v); }}},
        {"n_antennas", {"count", "16", [](RunConfig &c, const std::string &v) { c.scenario.source.n_antennas = to_uint(v); }}},
        {"antenna_spacing_norm", {"wavelengths", "0.5", [](RunConfig &c, const std::string &v) { c.scenario.source.antenna_spacing_norm = to_double(v); }}},
        {"altitude", {"m", "150", [](RunConfig &c, const std::string &v) { c.scenario.ris.altitude = to_double(v); }}},
        {"backhaul_bandwidth", {"Hz", "50e6", [](RunConfig &c, const std::string &v) { c.scenario.backhaul_bandwidth = to_double(v); }}},
        {"fronthaul_bandwidth", {"Hz", "2e6", [](RunConfig &c, const std::string &v) { c.scenario.fronthaul_bandwidth = to_double(v); }}},
        {"backhaul_frequency", {"GHz", "3.5", [](RunConfig &c, const std::string &v) { c.scenario.ris.frequency_ghz = to_double(v); }}},
        {"fronthaul_frequency", {"GHz", "2", [](RunConfig &c, const std::string &v) { c.scenario.fronthaul_frequency_ghz = to_double(v); }}},
        {"p_max", {"dBW", "30", [](RunConfig &c, const std::string &v) { c.scenario.source.max_power_w = db_to_linear(to_double(v)); }}},
        {"g_max", {"dB", "8", [](RunConfig &c, const std::string &v) { c.scenario.source.pattern.g_max_db = to_double(v); }}},
        {"sla_v", {"dB", "30", [](RunConfig &c, const std::string &v) { c.scenario.source.pattern.sla_v_db = to_double(v); }}},
        {"a_max", {"dB", "30", [](RunConfig &c, const std::string &v) { c.scenario.source.pattern.a_max_db = to_double(v); }}},
        {"theta_hpbw", {"deg", "65", [](RunConfig &c, const std::string &v) { c.scenario.source.pattern.theta_hpbw_deg = to_double(v); }}},
        {"phi_hpbw", {"deg", "65", [](RunConfig &c, const std::string &v) { c.scenario.source.pattern.phi_hpbw_deg = to_double(v); }}},
        {"uav_altitude_min", {"m", "45", [](RunConfig &c, const std::string &v) { c.scenario.uav_altitude_min = to_double(v); }}},
        {"uav_altitude_max", {"m", "150", [](RunConfig &c, const std::string &v) { c.scenario.uav_altitude_max = to_double(v); }}},
        {"uav_tx_power", {"dBm", "23", [](RunConfig &c, const std::string &v) { c.scenario.uav_tx_power_dbm = to_double(v); }}},
        {"nlos_excess", {"dB", "20", [](RunConfig &c, const std::string &v) { c.scenario.nlos_excess_db = to_double(v); }}},
        {"l_max", {"count", "5", [](RunConfig &c, const std::string &v) { c.scenario.l_max = to_uint(v); }}},
        {"delta", {"-", "0.1", [](RunConfig &c, const std::string &v) { c.scenario.delta = to_double(v); }}},
        {"trials", {"count", "100", [](RunConfig &c, const std::string &v) { c.trials = to_uint(v); }}},
        {"seed", {"-", "1", [](RunConfig &c, const std::string &v) { c.seed = to_uint(v); }}},
    };
    return k;
}

} // namespace

ParsedConfig parse_config(std::istream &in, const std::string &source)
{
    ParsedConfig out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(source, line_no, "missing key before '='");
        if (value.empty())
            throw ConfigError(source, line_no, "missing value for '" + key + "'");
        const auto it = keys().find(key);
        if (it == keys().end())
        {
            out.warnings.push_back(source + ":" + std::to_string(line_no) + ": unknown key '" + key + "' ignored");
            continue;
        }
        try
        {
            it->second.set(out.config, value);
        }
        catch (const std::exception &e)
        {
            throw ConfigError(source, line_no, key + ": " + e.what());
        }
    }
    if (out.config.trials < 1)
        throw ConfigError(source, line_no, "trials must be >= 1");
    try
    {
        out.config.scenario.validate();
    }
    catch (const DomainError &e)
    {
        throw ConfigError(source, line_no, e.what());
    }
    return out;
}

ParsedConfig load_config(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError(path, 0, "cannot open file");
    return parse_config(f, path);
}

std::string config_reference()
{
    std::string s;
    for (const auto &[name, k] : keys())
        s += name + " [" + k.unit + "] default " + k.def + "\n";
    return s;
}

} // namespace aerialris
