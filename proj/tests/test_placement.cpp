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

#include <cmath>
#include <numbers>

#include "aerialris/error.hpp"
#include "aerialris/placement.hpp"
#include "aerialris/random.hpp"

using namespace aerialris;

namespace
{
// Leftmost local minimum of the exact numerator objective on a 1e-5 grid.
double brute_force_xi(double H, double h, double w)
{
    const auto g = cubic_geometry(H, h, w);
    const double step = 1e-5;
    double prev = numerator_objective(step, g);
    for (int i = 2; i < 100000; ++i)
    {
        const double cur = numerator_objective(i * step, g);
        if (cur > prev)
            return (i - 1) * step;
        prev = cur;
    }
    return 1.0;
}
} // namespace

TEST_CASE("xi_solve closed form for ground-level UAV")
{
    const double zeta = 0.15;
    const double expect = 0.5 - std::sqrt(0.25 - zeta * zeta);
    CHECK(xi_solve(150, 0, 1000) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect == doctest::Approx(0.023031).epsilon(1e-5));
}

TEST_CASE("xi_solve is near the origin for distant UAVs and grows with H")
{
    CHECK(xi_solve(150, 45, 3000) < 0.01);
    CHECK(xi_solve(150, 45, 3000) > 0.0);
    double prev = 0.0;
    for (double H = 100; H <= 300; H += 10)
    {
        const double xi = xi_solve(H, 45, 1500);
        CHECK(xi > prev);
        prev = xi;
    }
    // h = 0 and H -> w/2 drives xi toward 1/2.
    CHECK(xi_solve(499.9, 0, 1000) > 0.45);
}

TEST_CASE("cubic roots are ordered stationary points")
{
    const auto g = cubic_geometry(150, 45, 1000);
    const auto r = cubic_roots(g);
    CHECK(r[0] > r[1]);
    CHECK(r[1] > r[2]);
    for (double x : r)
    {
        const double t = x - 0.5;
        CHECK(std::abs(t * t * t + g.a * t + g.b) < 1e-14);
    }
}

TEST_CASE("xi_solve matches brute-force minimization in the regime")
{
    Rng rng(21);
    int checked = 0;
    for (int i = 0; i < 200; ++i)
    {
        const double H = rng.uniform(100, 300), h = rng.uniform(0, 150), w = rng.uniform(500, 3000);
        double xi;
        try
        {
            xi = xi_solve(H, h, w);
        }
        catch (const GeometryRegimeError &)
        {
            continue;
        }
        ++checked;
        CHECK(std::abs(xi - brute_force_xi(H, h, w)) <= 1e-3);
    }
    CHECK(checked > 150);
}

TEST_CASE("xi_solve rejects out-of-regime geometry")
{
    CHECK_THROWS_AS(xi_solve(300, 0, 500), GeometryRegimeError);
    CHECK_THROWS_AS(xi_solve(150, 0, 0), DomainError);
}

TEST_CASE("per_uav_point")
{
    UavBs u;
    u.position = {1000, 0, 0};
    const Vec2 q = per_uav_point(u, 150);
    CHECK(q.x == doctest::Approx(23.03).epsilon(1e-3));
    CHECK(q.y == 0.0);
    u.position = {600, 800, 60};
    const Vec2 p = per_uav_point(u, 150);
    CHECK(p.x * 800 - p.y * 600 == doctest::Approx(0.0).scale(1.0));
    CHECK(p.x > 0.0);
}

TEST_CASE("weiszfeld symmetric instances")
{
    const double s3 = std::sqrt(3.0);
    WeiszfeldProblem tri{{{0, 0, 0}, {2, 0, 0}, {1, s3, 0}}, {1, 1, 1}};
    const auto r = weiszfeld(tri);
    CHECK(distance(r.point, {1, s3 / 3, 0}) <= tri.tolerance);
    CHECK_FALSE(r.at_anchor);

    WeiszfeldProblem sq{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, {1, 1, 1, 1}};
    CHECK(distance(weiszfeld(sq).point, {0.5, 0.5, 0}) <= sq.tolerance);

    WeiszfeldProblem pair{{{0, 0, 100}, {10, 20, 50}}, {1, 1}};
    CHECK(distance(weiszfeld(pair).point, {5, 10, 75}) <= pair.tolerance);
}

TEST_CASE("weiszfeld anchor test")
{
    WeiszfeldProblem p{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {10, 1, 1}};
    CHECK(anchor_residual(p, 0) == doctest::Approx(std::sqrt(2.0)));
    const auto r = weiszfeld(p);
    CHECK(r.at_anchor);
    CHECK(r.anchor_index == 0);
    CHECK(r.point == Vec3{0, 0, 0});
}

TEST_CASE("weiszfeld first-order optimality on random interior instances")
{
    Rng rng(3);
    for (int i = 0; i < 100; ++i)
    {
        WeiszfeldProblem p;
        const std::size_t n = 3 + rng.below(8);
        for (std::size_t k = 0; k < n; ++k)
        {
            p.anchors.push_back({rng.uniform(0, 500), rng.uniform(-250, 250), rng.uniform(45, 150)});
            p.weights.push_back(rng.uniform(0.5, 1.5));
        }
        const auto r = weiszfeld(p);
        if (r.at_anchor)
            CHECK(anchor_residual(p, r.anchor_index) <= p.weights[r.anchor_index]);
        else
            CHECK(weiszfeld_gradient_norm(p, r.point) <= 1e-4);
    }
}

TEST_CASE("weiszfeld collinear anchors are flagged and solved")
{
    WeiszfeldProblem p{{{0, 0, 0}, {1, 0, 0}, {5, 0, 0}, {9, 0, 0}}, {1, 1, 1, 1.5}};
    const auto r = weiszfeld(p);
    CHECK(r.collinear);
    // Weighted median along the line is the anchor at x = 5.
    CHECK(r.point.x == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("weiszfeld iterate landing on an anchor")
{
    // Starting exactly on a non-optimal anchor forces the restart path.
    WeiszfeldProblem p{{{0, 0, 0}, {4, 0, 0}, {2, 3, 0}, {2, -3, 0}}, {1, 1, 1, 1}};
    const auto r = weiszfeld(p, {0, 0, 0});
    CHECK(weiszfeld_gradient_norm(p, r.point) <= 1e-4);
}

TEST_CASE("weiszfeld input validation and iteration cap")
{
    CHECK_THROWS_AS(weiszfeld(WeiszfeldProblem{}), DomainError);
    CHECK_THROWS_AS(weiszfeld(WeiszfeldProblem{{{0, 0, 0}}, {0.0}}), DomainError);
    WeiszfeldProblem slow{{{0, 0, 0}, {100, 0, 0}, {0, 100, 0}}, {1, 1, 1}};
    slow.max_iterations = 2;
    slow.tolerance = 1e-12;
    CHECK_THROWS_AS(weiszfeld(slow, {90, 90, 0}), ConvergenceError);
}

TEST_CASE("aggregate_q")
{
    const Vec2 one[] = {{12, 3}};
    CHECK(aggregate_q(one) == Vec2{12, 3});
    const Vec2 same[] = {{5, 5}, {5, 5}, {5, 5}};
    CHECK(distance(lift(aggregate_q(same), 0), {5, 5, 0}) < 1e-9);
    const Vec2 robust[] = {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {100, 0}};
    CHECK(aggregate_q(robust).norm() <= 1.0);
    CHECK_THROWS(aggregate_q(std::span<const Vec2>{}));
}
