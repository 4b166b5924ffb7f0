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

#include "aerialris/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aerialris/error.hpp"
#include "aerialris/random.hpp"

namespace aerialris
{

void ScenarioConfig::validate() const
{
    ris.validate();
    source.validate();
    if (!(region_side > 0.0))
        throw DomainError("scenario: region_side must be positive");
    if (m0 < 1)
        throw DomainError("scenario: at least one UAV-BS required");
    if (n_users < m0)
        throw DomainError("scenario: need at least one user per UAV-BS");
    if (!(uav_altitude_min > 0.0 && uav_altitude_max >= uav_altitude_min))
        throw DomainError("scenario: UAV altitude band must be positive and ordered");
    if (!(fronthaul_bandwidth > 0.0 && backhaul_bandwidth > 0.0))
        throw DomainError("scenario: bandwidths must be positive");
    if (!(fronthaul_frequency_ghz > 0.0))
        throw DomainError("scenario: fronthaul frequency must be positive");
    if (!(delta > 0.0))
        throw DomainError("scenario: delta must be positive");
    if (l_max < 2)
        throw DomainError("scenario: l_max must be >= 2");
}

double free_space_rx_power(double tx_power_w, double distance_m, double frequency_ghz)
{
    const double lambda = speed_of_light / (frequency_ghz * 1e9);
    const double a = lambda / (4.0 * std::numbers::pi * distance_m);
    return tx_power_w * a * a;
}

namespace
{
double dist2(const Vec2 &a, const Vec2 &b)
{
    const Vec2 d = a - b;
    return d.x * d.x + d.y * d.y;
}
} // namespace

std::vector<std::size_t> kmeans(const std::vector<Vec2> &points, std::size_t k, std::uint64_t seed,
                                std::vector<Vec2> *centroids)
{
    const std::size_t n = points.size();
    if (k < 1 || n < k)
        throw DomainError("kmeans: need 1 <= k <= number of points");
    Rng rng(seed);

    std::vector<Vec2> c;
    c.push_back(points[rng.below(n)]);
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());
    while (c.size() < k)
    {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            d2[i] = std::min(d2[i], dist2(points[i], c.back()));
            total += d2[i];
        }
        std::size_t pick = 0;
        if (total > 0.0)
        {
            double r = rng.uniform() * total;
            for (pick = 0; pick + 1 < n; ++pick)
            {
                r -= d2[pick];
                if (r < 0.0)
                    break;
            }
        }
        else
            pick = rng.below(n);
        c.push_back(points[pick]);
    }

    std::vector<std::size_t> label(n, k);
    for (int iter = 0; iter < 300; ++iter)
    {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i)
        {
            std::size_t best = 0;
            for (std::size_t j = 1; j < k; ++j)
                if (dist2(points[i], c[j]) < dist2(points[i], c[best]))
                    best = j;
            changed |= best != label[i];
            label[i] = best;
        }
        // Empty-cluster repair: steal the point farthest from its centroid.
        for (std::size_t j = 0; j < k; ++j)
        {
            if (std::find(label.begin(), label.end(), j) != label.end())
                continue;
            std::size_t far = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i)
            {
                const auto owner = label[i];
                if (std::count(label.begin(), label.end(), owner) < 2)
                    continue;
                const double d = dist2(points[i], c[owner]);
                if (d > far_d)
                    far_d = d, far = i;
            }
            label[far] = j;
            changed = true;
        }
        std::vector<Vec2> sum(k);
        std::vector<std::size_t> cnt(k, 0);
        for (std::size_t i = 0; i < n; ++i)
        {
            sum[label[i]] = sum[label[i]] + points[i];
            ++cnt[label[i]];
        }
        for (std::size_t j = 0; j < k; ++j)
            c[j] = sum[j] * (1.0 / double(cnt[j]));
        if (!changed)
            break;
    }
    if (centroids)
        *centroids = c;
    return label;
}

Scenario generate_scenario(const ScenarioConfig &config, std::uint64_t seed)
{
    config.validate();
    Scenario sc;
    sc.config = config;
    sc.seed = seed;
    Rng rng(derive_seed(seed, 1));

    const double half = 0.5 * config.region_side;
    sc.users.reserve(config.n_users);
    for (std::size_t i = 0; i < config.n_users; ++i)
    {
        const double x = rng.uniform(config.center.x - half, config.center.x + half);
        const double y = rng.uniform(config.center.y - half, config.center.y + half);
        sc.users.push_back({x, y});
    }

    std::vector<Vec2> centroids;
    const auto label = kmeans(sc.users, config.m0, derive_seed(seed, 2), &centroids);

    const double tx_w = dbm_to_watts(config.uav_tx_power_dbm);
    sc.demands.fronthaul_bandwidth = config.fronthaul_bandwidth;
    sc.demands.backhaul_bandwidth = config.backhaul_bandwidth;
    for (std::size_t m = 0; m < config.m0; ++m)
    {
        UavBs u;
        u.position = lift(centroids[m], rng.uniform(config.uav_altitude_min, config.uav_altitude_max));
        std::vector<double> rx;
        for (std::size_t i = 0; i < sc.users.size(); ++i)
            if (label[i] == m)
            {
                u.served_users.push_back(i);
                rx.push_back(free_space_rx_power(tx_w, distance(u.position, lift(sc.users[i], 0.0)),
                                                 config.fronthaul_frequency_ghz));
            }
        u.throughput = throughput(rx, config.fronthaul_bandwidth);
        sc.demands.per_uav_throughput.push_back(u.throughput);
        sc.uavs.push_back(std::move(u));
    }

    if (sc.center_distance() < 2.0 * config.region_side)
        sc.warnings.push_back("center distance " + std::to_string(sc.center_distance()) +
                              " m is below twice the region side; placement assumes a distant region");
    return sc;
}

} // namespace aerialris
