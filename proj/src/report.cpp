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

#include "aerialris/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>

namespace aerialris
{

std::string format_number(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[400];
    // Plain decimals for the usual range so bandwidths read as 25000000, not 2.5e+07.
    const double a = std::abs(v);
    const auto r = (a == 0.0 || (a >= 1e-5 && a < 1e16))
                       ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed)
                       : std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows)
{
    out << sweep_csv_header << '\n';
    for (const SweepRow &r : rows)
        out << to_string(r.axis) << ',' << format_number(r.value) << ',' << to_string(r.method) << ','
            << format_number(r.mean_dbm) << ',' << format_number(r.median_dbm) << ','
            << format_number(r.fullarray_rate) << ',' << format_number(r.feasible_rate) << ',' << r.trials << ','
            << r.seed << '\n';
}

void write_sweep_svg(std::ostream &out, const std::vector<SweepRow> &rows)
{
    const double W = 640, H = 420, left = 70, right = 190, top = 30, bottom = 50;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    std::map<int, std::vector<const SweepRow *>> series;
    for (const SweepRow &r : rows)
    {
        series[int(r.method)].push_back(&r);
        x0 = std::min(x0, r.value);
        x1 = std::max(x1, r.value);
        if (std::isfinite(r.median_dbm))
        {
            y0 = std::min(y0, r.median_dbm);
            y1 = std::max(y1, r.median_dbm);
        }
    }
    if (!(x1 > x0))
        x0 -= 1.0, x1 += 1.0;
    if (!std::isfinite(y0))
        y0 = 0.0, y1 = 1.0;
    if (!(y1 > y0))
        y0 -= 1.0, y1 += 1.0;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad, y1 += pad;
    auto px = [&](double x) { return left + (W - left - right) * (x - x0) / (x1 - x0); };
    auto py = [&](double y) { return top + (H - top - bottom) * (1.0 - (y - y0) / (y1 - y0)); };

    const char *colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#7f7f7f"};
    const std::string axis = rows.empty() ? "" : to_string(rows.front().axis);
    const std::uint64_t seed = rows.empty() ? 0 : rows.front().seed;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
        << W << ' ' << H << "\">\n";
    out << "<!-- aerialris sweep axis=" << axis << " seed=" << seed << " -->\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g stroke=\"black\" fill=\"none\"><rect x=\"" << left << "\" y=\"" << top << "\" width=\""
        << W - left - right << "\" height=\"" << H - top - bottom << "\"/></g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int i = 0; i <= 4; ++i)
    {
        const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
        out << "<text x=\"" << px(xv) << "\" y=\"" << H - bottom + 15 << "\" text-anchor=\"middle\">"
            << format_number(std::round(xv * 1000) / 1000) << "</text>\n";
        out << "<text x=\"" << left - 5 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
            << format_number(std::round(yv * 10) / 10) << "</text>\n";
    }
    out << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << axis
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << (top + H - bottom) / 2 << "\" transform=\"rotate(-90 16 "
        << (top + H - bottom) / 2 << ")\" text-anchor=\"middle\">median total power (dBm)</text>\n";
    out << "</g>\n";

    int legend = 0;
    for (const auto &[method, pts] : series)
    {
        const char *color = colors[method % 4];
        out << "<polyline class=\"series\" data-method=\"" << to_string(Method(method)) << "\" fill=\"none\" stroke=\""
            << color << "\" stroke-width=\"2\" points=\"";
        for (const SweepRow *r : pts)
            if (std::isfinite(r->median_dbm))
                out << px(r->value) << ',' << py(r->median_dbm) << ' ';
        out << "\"/>\n";
        const double ly = top + 15 + 18 * legend++;
        out << "<line x1=\"" << W - right + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - right + 30 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>";
        out << "<text x=\"" << W - right + 35 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << to_string(Method(method)) << "</text>\n";
    }
    out << "</svg>\n";
}

namespace
{
nlohmann::json vec(const Vec2 &v) { return {v.x, v.y}; }
nlohmann::json vec(const Vec3 &v) { return {v.x, v.y, v.z}; }
} // namespace

nlohmann::json solution_json(const Scenario &sc, const SetupResult &r)
{
    using nlohmann::json;
    const RisSetup &s = r.setup;
    json j;
    j["seed"] = sc.seed;
    j["ris"] = {{"q", vec(s.q)}, {"altitude_m", s.altitude}, {"position", vec(s.position())},
                {"n_elements", sc.config.ris.n_elements}};
    j["align_point_full"] = vec(s.full_align);
    j["structure"] = {{"mode", to_string(s.decision.mode)},
                      {"max_deviation", s.decision.max_deviation},
                      {"threshold", s.decision.threshold}};
    json plan;
    plan["mode"] = to_string(s.plan.mode);
    plan["L"] = s.plan.L;
    plan["subsets"] = s.plan.subsets;
    plan["sizes_continuous"] = s.plan.sizes_continuous;
    plan["sizes_integer"] = s.plan.sizes_integer;
    plan["k"] = s.plan.k;
    plan["objective"] = s.plan.objective;
    plan["align_points"] = json::array();
    for (const Vec3 &p : s.plan.align_points)
        plan["align_points"].push_back(vec(p));
    j["plan"] = plan;
    j["phases_rad"] = s.phases.phases;
    j["uavs"] = json::array();
    for (std::size_t m = 0; m < sc.uavs.size(); ++m)
    {
        const double p = r.power.per_uav_power[m];
        j["uavs"].push_back({{"position", vec(sc.uavs[m].position)},
                             {"throughput_bps", sc.uavs[m].throughput},
                             {"users", sc.uavs[m].served_users.size()},
                             {"deviation", r.power.final_deviations[m]},
                             {"gain", r.power.gains[m]},
                             {"power_w", p},
                             {"power_dbm", watts_to_dbm(p)}});
    }
    j["total_power_w"] = r.power.total;
    j["total_power_dbm"] = watts_to_dbm(r.power.total);
    j["p_max_w"] = sc.config.source.max_power_w;
    j["source_gain_db"] = linear_to_db(r.budget.source_gain);
    j["feasible"] = r.power.feasible;
    j["warnings"] = r.warnings;
    return j;
}

void write_summary(std::ostream &out, const Scenario &sc, const SetupResult &r)
{
    const RisSetup &s = r.setup;
    out << "seed " << sc.seed << ", " << sc.uavs.size() << " UAV-BSs, " << sc.users.size() << " users\n";
    out << "RIS at (" << s.q.x << ", " << s.q.y << ", " << s.altitude << ") m\n";
    out << "structure " << to_string(s.plan.mode) << " (max deviation " << s.decision.max_deviation
        << ", threshold " << s.decision.threshold << ")";
    if (s.plan.mode == ArrayMode::sub)
    {
        out << ", L = " << s.plan.L << ", sizes";
        for (auto n : s.plan.sizes_integer)
            out << ' ' << n;
    }
    out << '\n';
    for (std::size_t m = 0; m < sc.uavs.size(); ++m)
        out << "  UAV " << m << ": C = " << sc.uavs[m].throughput / 1e6 << " Mbps, P = "
            << watts_to_dbm(r.power.per_uav_power[m]) << " dBm\n";
    out << "total " << watts_to_dbm(r.power.total) << " dBm (" << r.power.total << " W), "
        << (r.power.feasible ? "feasible" : "INFEASIBLE") << '\n';
    for (const auto &w : r.warnings)
        out << "warning: " << w << '\n';
}

void write_oracle_csv(std::ostream &out, const std::vector<OracleComparison> &rows, std::size_t resolution)
{
    out << "seed,resolution,proposed_dbm,oracle_dbm,proposed_w,oracle_w,gap_percent\n";
    for (const auto &r : rows)
        out << r.seed << ',' << resolution << ',' << format_number(watts_to_dbm(r.proposed_w)) << ','
            << format_number(watts_to_dbm(r.oracle_w)) << ',' << format_number(r.proposed_w) << ','
            << format_number(r.oracle_w) << ',' << format_number(r.gap_percent()) << '\n';
}

} // namespace aerialris
