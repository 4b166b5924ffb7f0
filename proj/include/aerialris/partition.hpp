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
#include <string>
#include <vector>

#include "aerialris/channel.hpp"
#include "aerialris/placement.hpp"
#include "aerialris/precoding.hpp"
#include "aerialris/uav.hpp"

namespace aerialris
{

enum class ArrayMode
{
    full,
    sub
};

const char *to_string(ArrayMode mode);

struct PartitionPlan
{
    ArrayMode mode = ArrayMode::full;
    std::size_t L = 1;                             // effective number of sub-arrays
    std::vector<std::size_t> subset_of_uav;        // UAV index -> sub-array index
    std::vector<std::vector<std::size_t>> subsets; // sub-array index -> UAV indices
    std::vector<double> sizes_continuous;
    std::vector<std::size_t> sizes_integer;
    std::vector<Vec3> align_points;
    double k = 0.0;   // outlier-cap factor
    double cap = 0.0; // k N
    double max_deviation = 0.0;
    double objective = 0.0; // sum_i sum_{m in M_i} A_m / N_i^2

    // Contiguous element windows, sub-array i first to last.
    std::vector<ElementRange> element_ranges() const;
};

// |cos phi_t(q, rho_m)| per UAV, floored at 1e-12 so weights stay positive.
std::vector<double> cosine_weights(const Vec3 &ris_pos, std::span<const UavBs> uavs);

// Weighted geometric median of the UAV positions with cosine weights.
WeiszfeldResult align_point_full(const Vec2 &q_star, double ris_altitude, std::span<const UavBs> uavs);

struct StructureDecision
{
    ArrayMode mode = ArrayMode::full;
    double max_deviation = 0.0;
    double threshold = 0.0; // hpbw(N) / 2
};

StructureDecision structure_decision(const Vec3 &ris_pos, const Vec3 &align, std::span<const UavBs> uavs,
                                     const RisConfig &ris);

// Bin index (0-based) of each deviation among L equal bins of
// [-max_dev, max_dev], left-open and right-closed.
std::vector<std::size_t> divide_sets(std::span<const double> deviations, double max_deviation, std::size_t L);
std::vector<std::size_t> divide_sets(std::span<const UavBs> uavs, const Vec3 &align, const Vec3 &ris_pos,
                                     std::size_t L);

struct SizeSolution
{
    std::vector<double> sizes;
    std::vector<bool> capped;
    double mu = 0.0;
};

// Reverse water-filling: N_i = min(cap, cbrt(2 S_i / mu)) with mu set so the
// sizes sum to n_total.  S_i is the bound-coefficient sum of subset i.
SizeSolution partition_sizes(std::span<const double> subset_sums, double n_total, double cap);

double partition_objective(std::span<const double> subset_sums, std::span<const double> sizes);

// Floor, then hand the remainder to the largest fractional parts (ties to the
// lower index); every entry ends >= 1.
std::vector<std::size_t> round_sizes(std::span<const double> sizes, std::size_t n_total);

// Searches L over {2..l_max} for the smallest bound objective.  Fills every
// field except align_points and sizes_integer.
PartitionPlan search_L(std::span<const UavBs> uavs, const Vec3 &align, const Vec3 &ris_pos,
                       std::span<const double> bound_coeffs, const RisConfig &ris, std::size_t l_max);

// Per-subset cosine-weighted geometric medians.
std::vector<Vec3> subarray_align_points(const std::vector<std::vector<std::size_t>> &subsets,
                                        std::span<const UavBs> uavs, std::span<const double> weights);

// UAVs whose deviation from their sub-array's align point exceeds half that
// sub-array's HPBW.
std::vector<std::size_t> hpbw_outliers(const PartitionPlan &plan, std::span<const UavBs> uavs, const Vec3 &ris_pos,
                                       const RisConfig &ris);

} // namespace aerialris
