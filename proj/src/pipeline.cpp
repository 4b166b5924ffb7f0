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

#include "aerialris/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "aerialris/antenna.hpp"
#include "aerialris/error.hpp"
#include "aerialris/random.hpp"

namespace aerialris
{

LinkBudget scenario_budget(const Scenario &sc)
{
    return make_link_budget(sc.config.ris, sc.config.source, source_gain_toward_ris(sc.config.source.pattern),
                            sc.config.backhaul_bandwidth, sc.uavs.size());
}

namespace
{
template <class F>
auto stage(const char *name, F &&f) -> decltype(f())
{
    try
    {
        return f();
    }
    catch (const StageError &)
    {
        throw;
    }
    catch (const std::exception &e)
    {
        throw StageError(name, e.what());
    }
}
} // namespace

SetupResult solve_with_placement(const Scenario &sc, const Vec2 &q, const PlacementOptions &opt)
{
    const auto &cfg = sc.config;
    SetupResult out;
    out.budget = scenario_budget(sc);
    RisSetup &s = out.setup;
    s.q = q;
    s.altitude = cfg.ris.altitude;
    const Vec3 ris_pos = s.position();

    if (opt.fixed_align)
        s.full_align = *opt.fixed_align;
    else
    {
        const auto r = stage("align", [&] { return align_point_full(q, s.altitude, sc.uavs); });
        s.full_align = r.point;
        if (r.collinear)
            out.warnings.push_back("align: UAV-BS positions are collinear; median found along the line");
    }
    s.decision = stage("structure", [&] { return structure_decision(ris_pos, s.full_align, sc.uavs, cfg.ris); });

    PartitionPlan &plan = s.plan;
    if (opt.force_full || s.decision.mode == ArrayMode::full)
    {
        plan.mode = ArrayMode::full;
        plan.L = 1;
        plan.subset_of_uav.assign(sc.uavs.size(), 0);
        plan.subsets.assign(1, {});
        for (std::size_t m = 0; m < sc.uavs.size(); ++m)
            plan.subsets[0].push_back(m);
        plan.sizes_continuous = {double(cfg.ris.n_elements)};
        plan.sizes_integer = {cfg.ris.n_elements};
        plan.align_points = {s.full_align};
        plan.max_deviation = s.decision.max_deviation;
    }
    else
    {
        stage("partition", [&] {
            const auto a = bound_coefficients(out.budget, ris_pos, sc.uavs);
            plan = search_L(sc.uavs, s.full_align, ris_pos, a, cfg.ris, cfg.l_max);
            plan.sizes_integer = round_sizes(plan.sizes_continuous, cfg.ris.n_elements);
            plan.align_points = subarray_align_points(plan.subsets, sc.uavs, cosine_weights(ris_pos, sc.uavs));
            return 0;
        });
        const auto outliers = hpbw_outliers(plan, sc.uavs, ris_pos, cfg.ris);
        for (std::size_t m : outliers)
            out.warnings.push_back("partition: UAV-BS " + std::to_string(m) +
                                   " lies outside its sub-array's half-power beam");
    }

    stage("phases", [&] {
        s.phases.phases.assign(cfg.ris.n_elements, 0.0);
        const auto ranges = plan.element_ranges();
        for (std::size_t i = 0; i < ranges.size(); ++i)
            apply_phase_profile(s.phases, ris_pos, plan.align_points[i], cfg.ris, ranges[i]);
        return 0;
    });

    out.power = stage("power", [&] {
        return assign_powers(out.budget, ris_pos, sc.uavs, plan, cfg.ris, cfg.source.max_power_w);
    });
    if (!out.power.feasible)
        out.warnings.push_back("power: total exceeds P_max / G_s, setup infeasible");
    return out;
}

SetupResult run_proposed(const Scenario &sc)
{
    if (sc.uavs.empty())
        throw StageError("placement", "scenario has no UAV-BSs");
    std::vector<Vec2> points;
    stage("placement", [&] {
        for (const UavBs &u : sc.uavs)
            points.push_back(per_uav_point(u, sc.config.ris.altitude));
        return 0;
    });
    const Vec2 q = stage("aggregate", [&] { return aggregate_q(points); });

    SetupResult out = solve_with_placement(sc, q);
    out.setup.per_uav_points = std::move(points);

    double w_max = 0.0;
    for (const UavBs &u : sc.uavs)
        w_max = std::max(w_max, u.position.horizontal().norm());
    if (q.norm() > sc.config.delta * w_max)
        out.warnings.insert(out.warnings.begin(), "placement: q* lies outside the delta-ball around the source");
    for (const auto &w : sc.warnings)
        out.warnings.insert(out.warnings.begin(), "scenario: " + w);
    return out;
}

const char *to_string(Method m)
{
    switch (m)
    {
    case Method::proposed:
        return "proposed";
    case Method::half_center_ris:
        return "half_center_ris";
    case Method::origin_ris_center_align:
        return "origin_ris_center_align";
    case Method::terrestrial:
        return "terrestrial";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string &name)
{
    for (Method m : all_methods)
        if (name == to_string(m))
            return m;
    return std::nullopt;
}

double los_probability(double elevation_deg)
{
    // Urban-environment sigmoid fit.
    constexpr double a = 9.61, b = 0.16;
    return 1.0 / (1.0 + a * std::exp(-b * (elevation_deg - a)));
}

TerrestrialResult run_terrestrial(const Scenario &sc)
{
    const auto &cfg = sc.config;
    const LinkBudget budget = scenario_budget(sc);
    const double rad2deg = 180.0 / std::numbers::pi;
    const double boresight_az = std::atan2(cfg.center.y, cfg.center.x);
    Rng rng(derive_seed(sc.seed, 0x7e44));

    TerrestrialResult r;
    for (const UavBs &u : sc.uavs)
    {
        const Vec3 &p = u.position;
        const double d = p.norm();
        const double ground = p.horizontal().norm();
        const double elevation = std::atan2(p.z, ground) * rad2deg;
        double az = (std::atan2(p.y, p.x) - boresight_az) * rad2deg;
        while (az >= 180.0)
            az -= 360.0;
        while (az < -180.0)
            az += 360.0;
        const double g_ant = db_to_linear(antenna_gain(90.0 - elevation, az, cfg.source.pattern));

        const bool los = rng.uniform() < los_probability(elevation);
        double beta = budget.beta0 / (d * d);
        if (!los)
            beta *= db_to_linear(-cfg.nlos_excess_db) / (d * d);
        r.los.push_back(los);

        const double p_m =
            required_snr(u.throughput, budget) * budget.noise_power / (g_ant * beta * double(budget.n_antennas));
        r.power.per_uav_power.push_back(p_m);
        r.power.final_deviations.push_back(0.0);
        r.power.gains.push_back(double(budget.n_antennas));
        r.power.total += p_m;
    }
    r.power.feasible = r.power.total <= cfg.source.max_power_w / budget.source_gain;
    return r;
}

SetupResult run_method(const Scenario &sc, Method m)
{
    switch (m)
    {
    case Method::proposed:
        return run_proposed(sc);
    case Method::half_center_ris:
        return solve_with_placement(sc, sc.config.center * 0.5);
    case Method::origin_ris_center_align: {
        double h = 0.0;
        for (const UavBs &u : sc.uavs)
            h += u.position.z;
        h /= double(sc.uavs.size());
        PlacementOptions opt;
        opt.fixed_align = lift(sc.config.center, h);
        opt.force_full = true;
        return solve_with_placement(sc, Vec2{}, opt);
    }
    case Method::terrestrial: {
        SetupResult out;
        out.budget = scenario_budget(sc);
        out.power = run_terrestrial(sc).power;
        out.uses_ris = false;
        return out;
    }
    }
    throw DomainError("run_method: unknown method");
}

} // namespace aerialris
