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
#include <cstdint>
#include <string>
#include <vector>

#include "aerialris/channel.hpp"
#include "aerialris/power.hpp"
#include "aerialris/uav.hpp"

namespace aerialris
{

struct ScenarioConfig
{
    double region_side = 500.0;   // m
    Vec2 center{1000.0, 0.0};     // rho_G
    std::size_t n_users = 100;
    std::size_t m0 = 8;           // UAV-BS count
    double uav_altitude_min = 45.0;
    double uav_altitude_max = 150.0;
    double uav_tx_power_dbm = 23.0; // per-user fronthaul power
    double fronthaul_frequency_ghz = 2.0;
    double fronthaul_bandwidth = 2e6; // Hz, per UAV-BS
    double backhaul_bandwidth = 50e6; // Hz, shared by all UAV-BSs
    RisConfig ris;
    SourceConfig source;
    double delta = 0.1;
    std::size_t l_max = 5;
    double nlos_excess_db = 20.0; // terrestrial benchmark

    void validate() const;
};

struct Scenario
{
    ScenarioConfig config;
    std::vector<Vec2> users;
    std::vector<UavBs> uavs;
    FronthaulDemand demands;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;

    double center_distance() const { return config.center.norm(); }
};

// Users uniform in the square region, clustered by k-means++ / Lloyd into m0
// groups; one UAV-BS above each cluster centroid at a uniform random altitude.
// C_m follows from free-space fronthaul links to the cluster's users.
Scenario generate_scenario(const ScenarioConfig &config, std::uint64_t seed);

// Lloyd's algorithm with k-means++ seeding; every cluster ends non-empty.
std::vector<std::size_t> kmeans(const std::vector<Vec2> &points, std::size_t k, std::uint64_t seed,
                                std::vector<Vec2> *centroids = nullptr);

// Received power of a free-space link, W.
double free_space_rx_power(double tx_power_w, double distance_m, double frequency_ghz);

} // namespace aerialris
