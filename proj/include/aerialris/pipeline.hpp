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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aerialris/partition.hpp"
#include "aerialris/power.hpp"
#include "aerialris/precoding.hpp"
#include "aerialris/scenario.hpp"

namespace aerialris
{

struct RisSetup
{
    Vec2 q;
    double altitude = 0.0;
    std::vector<Vec2> per_uav_points; // empty when q was fixed externally
    Vec3 full_align;                  // rho_bar before the structure decision
    StructureDecision decision;
    PartitionPlan plan;
    PhaseProfile phases;

    Vec3 position() const { return lift(q, altitude); }
};

struct SetupResult
{
    RisSetup setup;
    PowerSolution power;
    LinkBudget budget;
    std::vector<std::string> warnings;
    bool uses_ris = true;

    bool full_array() const { return uses_ris && setup.plan.mode == ArrayMode::full; }
};

struct PlacementOptions
{
    std::optional<Vec3> fixed_align; // skip the cosine-weighted median
    bool force_full = false;
};

LinkBudget scenario_budget(const Scenario &sc);

// Full proposed setup: per-UAV cubic points, their geometric median q*, the
// align point, structure decision, partition and powers.
SetupResult run_proposed(const Scenario &sc);

// Everything after q: used by the proposed method and the RIS benchmarks.
SetupResult solve_with_placement(const Scenario &sc, const Vec2 &q, const PlacementOptions &opt = {});

enum class Method
{
    proposed,
    half_center_ris,
    origin_ris_center_align,
    terrestrial
};

const char *to_string(Method m);
std::optional<Method> parse_method(const std::string &name);
inline constexpr Method all_methods[] = {Method::proposed, Method::half_center_ris, Method::origin_ris_center_align,
                                        Method::terrestrial};

// Direct source-to-UAV links without the RIS: urban LoS probability over
// elevation, free space when LoS, and an extra 20 log10(d) plus a fixed excess
// when NLoS.  A model substitute for measured terrestrial channels.
struct TerrestrialResult
{
    PowerSolution power;
    std::vector<bool> los;
};
TerrestrialResult run_terrestrial(const Scenario &sc);

double los_probability(double elevation_deg);

// RIS benchmarks return a full SetupResult; terrestrial only fills `power`.
SetupResult run_method(const Scenario &sc, Method m);

} // namespace aerialris
