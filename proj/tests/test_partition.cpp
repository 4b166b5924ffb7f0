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
#include <limits>

#include "aerialris/error.hpp"
#include "aerialris/partition.hpp"
#include "aerialris/random.hpp"

using namespace aerialris;

namespace
{
UavBs uav_at(double x, double y, double z, double c = 4e7)
{
    UavBs u;
    u.position = {x, y, z};
    u.throughput = c;
    u.served_users = {0};
    return u;
}
} // namespace

TEST_CASE("divide_sets interval membership")
{
    const double dev[] = {-0.02, -0.001, 0.019};
    const auto b = divide_sets(dev, 0.02, 2);
    CHECK(b == std::vector<std::size_t>{0, 0, 1});

    const double edge[] = {0.0, 0.02, -0.02};
    const auto e = divide_sets(edge, 0.02, 2);
    CHECK(e[0] == 0); // right-closed at 0
    CHECK(e[1] == 1); // +max lands in the last bin
    CHECK(e[2] == 0); // -max clamps into the first bin

    const double three[] = {-0.015, 0.0, 0.015};
    CHECK(divide_sets(three, 0.02, 3) == std::vector<std::size_t>{0, 1, 2});

    CHECK_THROWS_AS(divide_sets(std::span<const double>{}, 0.02, 2), DomainError);
}

TEST_CASE("partition_sizes examples")
{
    const double equal[] = {3.0, 3.0};
    auto s = partition_sizes(equal, 300, 1000);
    CHECK(s.sizes[0] == doctest::Approx(150.0).epsilon(1e-12));
    CHECK(s.sizes[1] == doctest::Approx(150.0).epsilon(1e-12));

    const double skew[] = {8.0, 1.0};
    s = partition_sizes(skew, 300, 1000);
    CHECK(s.sizes[0] == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(s.sizes[1] == doctest::Approx(100.0).epsilon(1e-12));

    s = partition_sizes(skew, 300, 180);
    CHECK(s.sizes[0] == doctest::Approx(180.0).epsilon(1e-12));
    CHECK(s.sizes[1] == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(s.capped[0]);
    CHECK_FALSE(s.capped[1]);

    // Brute-force continuous grid over the feasible N1 range.
    double best = std::numeric_limits<double>::infinity(), arg = 0.0;
    for (double n1 = 120.0; n1 <= 180.0; n1 += 1e-3)
    {
        const double f = 8.0 / (n1 * n1) + 1.0 / ((300 - n1) * (300 - n1));
        if (f < best)
            best = f, arg = n1;
    }
    CHECK(arg == doctest::Approx(180.0).epsilon(1e-5));

    CHECK_THROWS_AS(partition_sizes(skew, 300, 140), PartitionError);
}

TEST_CASE("partition_sizes optimality conditions on random instances")
{
    Rng rng(5);
    for (int t = 0; t < 200; ++t)
    {
        const std::size_t L = 2 + rng.below(4);
        std::vector<double> sums(L);
        for (double &v : sums)
            v = std::exp(rng.uniform(-3, 3));
        const double n = 300.0;
        const double cap = n / double(L) * rng.uniform(1.0, 3.0);
        const auto s = partition_sizes(sums, n, cap);
        double total = 0.0;
        for (double v : s.sizes)
            total += v;
        CHECK(total == doctest::Approx(n).epsilon(1e-9));
        // Uncapped entries share one multiplier; capped ones would want more.
        double mu = -1.0;
        for (std::size_t i = 0; i < L; ++i)
        {
            CHECK(s.sizes[i] <= cap * (1 + 1e-12));
            if (!s.capped[i])
            {
                const double m = 2.0 * sums[i] / std::pow(s.sizes[i], 3.0);
                if (mu < 0)
                    mu = m;
                CHECK(m == doctest::Approx(mu).epsilon(1e-9));
            }
        }
        if (mu > 0)
            for (std::size_t i = 0; i < L; ++i)
                if (s.capped[i])
                    CHECK(2.0 * sums[i] / std::pow(cap, 3.0) >= mu * (1 - 1e-9));
        // Larger coefficient sums never get fewer elements.
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = 0; j < L; ++j)
                if (sums[i] > sums[j])
                    CHECK(s.sizes[i] >= s.sizes[j] * (1 - 1e-12));
    }
}

TEST_CASE("round_sizes")
{
    const double a[] = {150.0, 150.0};
    CHECK(round_sizes(a, 300) == std::vector<std::size_t>{150, 150});
    const double b[] = {180.0, 120.0};
    CHECK(round_sizes(b, 300) == std::vector<std::size_t>{180, 120});
    // Floor gives 299; the one leftover element goes to the first of the tied
    // largest fractional parts.
    const double c[] = {100.4, 100.4, 99.2};
    CHECK(round_sizes(c, 300) == std::vector<std::size_t>{101, 100, 99});
    const double d[] = {0.2, 9.8};
    CHECK(round_sizes(d, 10) == std::vector<std::size_t>{1, 9});
    CHECK_THROWS_AS(round_sizes(d, 1), PartitionError);
}

TEST_CASE("rounded sizes are near the best integer split")
{
    Rng rng(8);
    for (int t = 0; t < 50; ++t)
    {
        const double sums[] = {std::exp(rng.uniform(-2, 2)), std::exp(rng.uniform(-2, 2)),
                               std::exp(rng.uniform(-2, 2))};
        const std::size_t n = 40;
        const auto s = partition_sizes(sums, double(n), double(n));
        const auto r = round_sizes(s.sizes, n);
        const double got[] = {double(r[0]), double(r[1]), double(r[2])};
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; i + j < n; ++j)
            {
                const double z[] = {double(i), double(j), double(n - i - j)};
                best = std::min(best, partition_objective(sums, z));
            }
        CHECK(partition_objective(sums, got) <= best * 1.02);
    }
}

TEST_CASE("structure_decision")
{
    RisConfig ris;
    ris.n_elements = 400;
    const Vec3 r{0, 0, 150};
    const UavBs one[] = {uav_at(1000, 0, 80)};
    auto d = structure_decision(r, one[0].position, one, ris);
    CHECK(d.mode == ArrayMode::full);
    CHECK(d.max_deviation == 0.0);
    CHECK(d.threshold == doctest::Approx(0.011073).epsilon(1e-4));

    const UavBs spread[] = {uav_at(-20, 1000, 150), uav_at(20, 1000, 150)};
    d = structure_decision(r, {0, 1000, 150}, spread, ris);
    CHECK(d.max_deviation == doctest::Approx(0.02).epsilon(1e-3));
    CHECK(d.mode == ArrayMode::sub);
}

TEST_CASE("align_point_full")
{
    const UavBs one[] = {uav_at(900, 40, 80)};
    CHECK(distance(align_point_full({20, 0}, 150, one).point, one[0].position) < 1e-9);
    // Mirror images through y = 0 get equal cosine weights from q on the axis.
    const UavBs pair[] = {uav_at(1000, 100, 80), uav_at(1000, -100, 80)};
    CHECK(distance(align_point_full({20, 0}, 150, pair).point, {1000, 0, 80}) < 1e-5);
}

TEST_CASE("search_L")
{
    RisConfig ris; // 300 elements, hpbw / 2 = 0.01476
    const Vec3 r{0, 0, 150};
    const Vec3 align{0, 1000, 150};
    const UavBs uavs[] = {uav_at(-20, 999.8, 150), uav_at(20, 999.8, 150)};
    const double coeffs[] = {1.0, 1.0};

    auto plan = search_L(uavs, align, r, coeffs, ris, 2);
    CHECK(plan.L == 2);
    CHECK(plan.mode == ArrayMode::sub);

    // The same two singleton subsets appear for every L; equal objectives
    // keep the smallest L.
    plan = search_L(uavs, align, r, coeffs, ris, 5);
    CHECK(plan.L == 2);
    CHECK(plan.k == doctest::Approx(2 * 0.5 * hpbw(300, 0.1) / 0.02).epsilon(1e-3));
    CHECK(plan.sizes_continuous[0] == doctest::Approx(150.0));
    CHECK(plan.subset_of_uav == std::vector<std::size_t>{0, 1});

    const double bad[] = {1.0};
    CHECK_THROWS_AS(search_L(uavs, align, r, bad, ris, 5), PartitionError);
    CHECK_THROWS_AS(search_L(uavs, align, r, coeffs, ris, 1), PartitionError);

    // Deviations far beyond the beam leave every L under the cap.
    const UavBs wide[] = {uav_at(-900, 400, 150), uav_at(900, 400, 150)};
    CHECK_THROWS_AS(search_L(wide, align, r, coeffs, ris, 2), PartitionError);
}

TEST_CASE("subarray_align_points and element ranges")
{
    const UavBs uavs[] = {uav_at(900, 0, 80), uav_at(1000, 50, 60), uav_at(1000, -50, 60)};
    const double w[] = {1.0, 1.0, 1.0};
    const auto pts = subarray_align_points({{0}, {1, 2}}, uavs, w);
    CHECK(distance(pts[0], uavs[0].position) < 1e-9);
    CHECK(distance(pts[1], {1000, 0, 60}) < 1e-5);

    PartitionPlan p;
    p.sizes_integer = {180, 120};
    const auto rg = p.element_ranges();
    CHECK(rg[0].first == 0);
    CHECK(rg[1].first == 180);
    CHECK(rg[1].end() == 300);
}
