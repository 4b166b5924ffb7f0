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
#include <span>
#include <vector>

#include "aerialris/channel.hpp"
#include "aerialris/partition.hpp"
#include "aerialris/uav.hpp"

namespace aerialris
{

struct FronthaulDemand
{
    std::vector<double> per_uav_throughput; // C_m, bits/s
    double fronthaul_bandwidth = 0.0;       // B_f, Hz
    double backhaul_bandwidth = 0.0;        // B_b, Hz
};

struct PowerSolution
{
    std::vector<double> per_uav_power; // W
    std::vector<double> final_deviations;
    std::vector<double> gains;
    double total = 0.0; // W
    bool feasible = false;
};

// Fronthaul throughput of one UAV-BS: each of its |U| users gets B_f / |U| of
// bandwidth and sees noise (B_f / |U|) N_psd.
double throughput(std::span<const double> per_user_rx_power_w, double fronthaul_bandwidth_hz);

// A_m = (2^{M0 C_m / B_b} - 1) sigma^2 ||rho_RIS - rho_m||^2 ||rho_RIS||^2 / (G_s beta0^2 M):
// the power needed per unit of array gain.
double bound_coefficient(const LinkBudget &budget, const Vec3 &ris_pos, const UavBs &uav);
std::vector<double> bound_coefficients(const LinkBudget &budget, const Vec3 &ris_pos, std::span<const UavBs> uavs);

// Powers A_m / g_m for already-evaluated deviations; throws NullGainError on g = 0.
PowerSolution powers_from_deviations(const LinkBudget &budget, const Vec3 &ris_pos, std::span<const UavBs> uavs,
                                     std::span<const double> deviations, std::span<const std::size_t> active_elements,
                                     double spacing_norm, double max_power_w);

// Lower-bound powers for a solved plan: deviations against the full-array
// align point, or each UAV's sub-array align point with that sub-array's size.
PowerSolution assign_powers(const LinkBudget &budget, const Vec3 &ris_pos, std::span<const UavBs> uavs,
                            const PartitionPlan &plan, const RisConfig &ris, double max_power_w);

// Rate delivered to `uav` at `power_w` through the closed-form SNR.
double achieved_rate(double power_w, const LinkBudget &budget, const Vec3 &ris_pos, const UavBs &uav, double gain);

} // namespace aerialris
