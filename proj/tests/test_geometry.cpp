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

#include "aerialris/error.hpp"
#include "aerialris/geometry.hpp"
#include "aerialris/random.hpp"

using namespace aerialris;

TEST_CASE("sin_aod_ris examples")
{
    const Vec3 ris{0, 0, 150};
    CHECK(sin_aod_ris(ris, {100, 0, 150}) == 1.0);
    CHECK(sin_aod_ris(ris, {0, 50, 150}) == 0.0);
    CHECK(sin_aod_ris(ris, {300, 400, 150}) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK_THROWS_AS(sin_aod_ris(ris, ris), DomainError);
}

TEST_CASE("sin_aoa_source examples")
{
    CHECK(sin_aoa_source({0, 0, 150}) == 0.0);
    CHECK(sin_aoa_source({150, 0, 150}) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sin_aoa_source({30, 40, 0}) == doctest::Approx(-0.6).epsilon(1e-15));
    CHECK(sin_aod_source({30, 40, 0}) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK_THROWS_AS(sin_aoa_source({0, 0, 0}), DomainError);
}

TEST_CASE("sin_aod_deviation examples")
{
    const Vec3 ris{0, 0, 150}, uav{100, 0, 150}, align{0, 50, 150};
    CHECK(sin_aod_deviation(ris, uav, uav) == 0.0);
    CHECK(sin_aod_deviation(ris, uav, align) == 1.0);
    CHECK_THROWS_AS(sin_aod_deviation(ris, ris, align), DomainError);
}

TEST_CASE("deviation antisymmetry and range on random points")
{
    Rng rng(7);
    for (int i = 0; i < 1000; ++i)
    {
        const Vec3 r{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(50, 300)};
        const Vec3 a{rng.uniform(0, 2000), rng.uniform(-500, 500), rng.uniform(0, 200)};
        const Vec3 b{rng.uniform(0, 2000), rng.uniform(-500, 500), rng.uniform(0, 200)};
        CHECK(std::abs(sin_aod_ris(r, a)) <= 1.0);
        CHECK(sin_aod_deviation(r, a, b) == -sin_aod_deviation(r, b, a));
    }
}

TEST_CASE("non-finite input is rejected")
{
    CHECK_THROWS_AS(sin_aod_ris({0, 0, 0}, {NAN, 0, 0}), DomainError);
}
