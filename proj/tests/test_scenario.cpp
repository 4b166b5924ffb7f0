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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "aerialris/antenna.hpp"
#include "aerialris/error.hpp"
#include "aerialris/oracle.hpp"
#include "aerialris/pipeline.hpp"

using namespace aerialris;

TEST_CASE("antenna_gain")
{
    AntennaPattern p;
    CHECK(antenna_gain(90, 0, p) == doctest::Approx(8.0));
    CHECK(antenna_gain(90 + p.theta_hpbw_deg, 0, p) == doctest::Approx(-4.0));
    CHECK(antenna_gain(0, 179, p) == doctest::Approx(-22.0));
    CHECK(antenna_gain(90, -180, p) >= 8.0 - 30.0);
    CHECK_THROWS_AS(antenna_gain(181, 0, p), DomainError);
    CHECK_THROWS_AS(antenna_gain(90, 180, p), DomainError);
    CHECK(source_gain_toward_ris(p) == doctest::Approx(db_to_linear(8.0)));
}

TEST_CASE("generate_scenario is deterministic and well formed")
{
    ScenarioConfig cfg;
    const auto a = generate_scenario(cfg, 17);
    const auto b = generate_scenario(cfg, 17);
    REQUIRE(a.users.size() == cfg.n_users);
    REQUIRE(a.uavs.size() == cfg.m0);
    for (std::size_t i = 0; i < a.users.size(); ++i)
        CHECK(a.users[i] == b.users[i]);
    for (std::size_t m = 0; m < a.uavs.size(); ++m)
    {
        CHECK(a.uavs[m].position == b.uavs[m].position);
        CHECK(a.uavs[m].throughput == b.uavs[m].throughput);
        CHECK(a.uavs[m].served_users == b.uavs[m].served_users);
    }

    const double h = 0.5 * cfg.region_side;
    std::size_t served = 0;
    for (const Vec2 &u : a.users)
    {
        CHECK(std::abs(u.x - cfg.center.x) <= h);
        CHECK(std::abs(u.y - cfg.center.y) <= h);
    }
    for (const UavBs &u : a.uavs)
    {
        CHECK(u.throughput > 0.0);
        CHECK_FALSE(u.served_users.empty());
        CHECK(u.position.z >= cfg.uav_altitude_min);
        CHECK(u.position.z <= cfg.uav_altitude_max);
        served += u.served_users.size();
    }
    CHECK(served == cfg.n_users);
    CHECK(a.warnings.empty());

    const auto c = generate_scenario(cfg, 18);
    CHECK_FALSE(c.users[0] == a.users[0]);
}

TEST_CASE("near region triggers a warning")
{
    ScenarioConfig cfg;
    cfg.center = {600, 0};
    CHECK_FALSE(generate_scenario(cfg, 1).warnings.empty());
}

TEST_CASE("kmeans")
{
    std::vector<Vec2> pts;
    for (int i = 0; i < 20; ++i)
    {
        pts.push_back({double(i % 5), double(i / 5)});
        pts.push_back({1000.0 + i % 5, double(i / 5)});
    }
    std::vector<Vec2> c;
    const auto lab = kmeans(pts, 2, 3, &c);
    for (std::size_t i = 0; i < pts.size(); i += 2)
    {
        CHECK(lab[i] == lab[0]);
        CHECK(lab[i + 1] != lab[0]);
    }
    CHECK(std::min(c[0].x, c[1].x) == doctest::Approx(2.0));
    // More clusters than distinct points still leaves none empty.
    const std::vector<Vec2> few = {{0, 0}, {0, 0}, {0, 0}, {1, 1}};
    const auto l2 = kmeans(few, 3, 1);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(std::count(l2.begin(), l2.end(), k) >= 1);
}

TEST_CASE("single UAV runs full-array at its own position")
{
    ScenarioConfig cfg;
    cfg.m0 = 1;
    cfg.n_users = 10;
    const auto sc = generate_scenario(cfg, 4);
    const auto r = run_proposed(sc);
    CHECK(r.full_array());
    CHECK(distance(r.setup.plan.align_points[0], sc.uavs[0].position) < 1e-6);
    CHECK(r.power.gains[0] == doctest::Approx(double(cfg.ris.n_elements) * cfg.ris.n_elements));
    CHECK(r.power.total == doctest::Approx(bound_coefficient(r.budget, r.setup.position(), sc.uavs[0]) /
                                           r.power.gains[0]));
}

TEST_CASE("proposed pipeline meets every demand")
{
    ScenarioConfig cfg;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
    {
        const auto sc = generate_scenario(cfg, seed);
        const auto r = run_proposed(sc);
        REQUIRE(r.power.per_uav_power.size() == sc.uavs.size());
        for (std::size_t m = 0; m < sc.uavs.size(); ++m)
        {
            const double rate =
                achieved_rate(r.power.per_uav_power[m], r.budget, r.setup.position(), sc.uavs[m], r.power.gains[m]);
            CHECK(std::abs(rate - sc.uavs[m].throughput) <= 1e-9 * sc.uavs[m].throughput);
        }
        CHECK(r.setup.phases.phases.size() == cfg.ris.n_elements);
        if (r.setup.plan.mode == ArrayMode::sub)
        {
            std::size_t total = 0;
            for (std::size_t n : r.setup.plan.sizes_integer)
                total += n;
            CHECK(total == cfg.ris.n_elements);
        }
    }
}

TEST_CASE("benchmarks")
{
    ScenarioConfig cfg;
    const auto sc = generate_scenario(cfg, 2);

    const auto half = run_method(sc, Method::half_center_ris);
    CHECK(half.setup.q == sc.config.center * 0.5);

    const auto origin = run_method(sc, Method::origin_ris_center_align);
    CHECK(origin.setup.q == Vec2{});
    CHECK(origin.full_array());
    double hbar = 0.0;
    for (const UavBs &u : sc.uavs)
        hbar += u.position.z / double(sc.uavs.size());
    CHECK(origin.setup.plan.align_points[0].x == doctest::Approx(sc.config.center.x));
    CHECK(origin.setup.plan.align_points[0].z == doctest::Approx(hbar));

    const auto ter = run_terrestrial(sc);
    CHECK(ter.los.size() == sc.uavs.size());
    for (double p : ter.power.per_uav_power)
        CHECK(p > 0.0);
    CHECK_FALSE(run_method(sc, Method::terrestrial).uses_ris);

    CHECK(los_probability(90.0) > los_probability(10.0));
    CHECK(parse_method("half_center_ris") == Method::half_center_ris);
    CHECK_FALSE(parse_method("nope").has_value());
}

TEST_CASE("oracle")
{
    ScenarioConfig cfg;
    cfg.m0 = 1;
    cfg.n_users = 10;
    const auto one = generate_scenario(cfg, 3);
    const auto o = exhaustive_oracle(one, 11);
    CHECK(distance(o.align, one.uavs[0].position) < 1e-9);
    CHECK(run_proposed(one).power.total <= o.power.total * (1 + 1e-9));

    CHECK(oracle_q_grid(10, 5).size() == 1 + 4 * 5);
    for (const Vec2 &q : oracle_q_grid(10, 5))
    {
        CHECK(q.x >= -1e-12);
        CHECK(q.norm() <= 10 + 1e-9);
    }
    CHECK_THROWS_AS(exhaustive_oracle(one, 101), ResourceGuardError);
    CHECK_THROWS_AS(exhaustive_oracle(one, 1), DomainError);

    cfg.m0 = 4;
    cfg.n_users = 40;
    const auto small = generate_scenario(cfg, 5);
    const auto r = exhaustive_oracle(small, 9);
    CHECK(r.evaluations > 0);
    CHECK(r.power.total > 0.0);
    CHECK(r.power.gains.size() == 4);
}
