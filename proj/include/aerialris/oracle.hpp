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

#include <cstddef>
#include <vector>

#include "aerialris/kernels.hpp"
#include "aerialris/power.hpp"
#include "aerialris/scenario.hpp"

namespace aerialris
{

inline constexpr std::size_t oracle_grid_limit = 1000000;

// Half-disc {||q|| <= radius, x >= 0}: the origin plus (R - 1) rings of R angles.
std::vector<Vec2> oracle_q_grid(double radius, std::size_t resolution);

// R^3 points spanning the smallest axis-aligned cube containing every UAV,
// restricted to z >= 0.
std::vector<Vec3> oracle_align_grid(const std::vector<UavBs> &uavs, std::size_t resolution);

struct OracleResult
{
    PowerSolution power;
    Vec2 q;
    Vec3 align;
    std::size_t evaluations = 0;
};

// Exhaustive full-array search over the q and align-point grids.  Throws
// ResourceGuardError if either grid exceeds oracle_grid_limit points.
OracleResult exhaustive_oracle(const Scenario &sc, std::size_t resolution,
                               const KernelTable &kernels = active_kernels());

} // namespace aerialris
