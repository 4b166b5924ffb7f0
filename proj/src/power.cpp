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

#include "aerialris/power.hpp"

#include <cmath>
#include <string>

#include "aerialris/error.hpp"

namespace aerialris
{

double throughput(std::span<const double> per_user_rx_power_w, double fronthaul_bandwidth_hz)
{
    if (per_user_rx_power_w.empty())
        throw DomainError("throughput: UAV-BS serves no users");
    if (!(fronthaul_bandwidth_hz > 0.0))
        throw DomainError("throughput: fronthaul bandwidth must be positive");
    const double share = fronthaul_bandwidth_hz / double(per_user_rx_power_w.size());
    const double noise = noise_power(share);
    double c = 0.0;
    for (double p : per_user_rx_power_w)
        c += share * std::log2(1.0 + p / noise);
    return c;
}

double bound_coefficient(const LinkBudget &budget, const Vec3 &ris_pos, const UavBs &uav)
{
    const double d_src = ris_pos.squared_norm();
    const double d_uav = (ris_pos - uav.position).squared_norm();
    if (!(d_src > 0.0) || !(d_uav > 0.0))
        throw DomainError("bound_coefficient: zero link distance");
    return required_snr(uav.throughput, budget) * budget.noise_power * d_uav * d_src /
           (budget.source_gain * budget.beta0 * budget.beta0 * double(budget.n_antennas));
}

std::vector<double> bound_coefficients(const LinkBudget &budget, const Vec3 &ris_pos, std::span<const UavBs> uavs)
{
    std::vector<double> a;
    a.reserve(uavs.size());
    for (const UavBs &u : uavs)
        a.push_back(bound_coefficient(budget, ris_pos, u));
    return a;
}

PowerSolution powers_from_deviations(const LinkBudget &budget, const Vec3 &ris_pos, std::span<const UavBs> uavs,
                                     std::span<const double> deviations, std::span<const std::size_t> active_elements,
                                     double spacing_norm, double max_power_w)
{
    PowerSolution sol;
    for (std::size_t m = 0; m < uavs.size(); ++m)
    {
        const double g = beamforming_gain(active_elements[m], spacing_norm, deviations[m]);
        const double peak = double(active_elements[m]) * double(active_elements[m]);
        // sin(N x) at a lattice null rounds to ~1e-16 rather than 0, so an
        // amplitude ratio below 1e-12 counts as a null.
        if (!(g > 1e-24 * peak))
            throw NullGainError("assign_powers: UAV-BS " + std::to_string(m) +
                                " sits on an array-factor null; re-partition the array");
        const double p = bound_coefficient(budget, ris_pos, uavs[m]) / g;
        sol.per_uav_power.push_back(p);
        sol.final_deviations.push_back(deviations[m]);
        sol.gains.push_back(g);
        sol.total += p;
    }
    sol.feasible = sol.total <= max_power_w / budget.source_gain;
    return sol;
}

PowerSolution assign_powers(const LinkBudget &budget, const Vec3 &ris_pos, std::span<const UavBs> uavs,
                            const PartitionPlan &plan, const RisConfig &ris, double max_power_w)
{
    std::vector<double> dev(uavs.size());
    std::vector<std::size_t> n_active(uavs.size());
    for (std::size_t m = 0; m < uavs.size(); ++m)
    {
        const std::size_t i = plan.mode == ArrayMode::full ? 0 : plan.subset_of_uav.at(m);
        dev[m] = sin_aod_deviation(ris_pos, uavs[m].position, plan.align_points.at(i));
        n_active[m] = plan.mode == ArrayMode::full ? ris.n_elements : plan.sizes_integer.at(i);
    }
    return powers_from_deviations(budget, ris_pos, uavs, dev, n_active, ris.element_spacing_norm, max_power_w);
}

double achieved_rate(double power_w, const LinkBudget &budget, const Vec3 &ris_pos, const UavBs &uav, double gain)
{
    return backhaul_rate(received_snr_closed(power_w, budget, ris_pos, uav.position, gain), budget);
}

} // namespace aerialris
