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
#include "aerialris/monte_carlo.hpp"

using namespace aerialris;

namespace
{
bool same_rows(const std::vector<SweepRow> &a, const std::vector<SweepRow> &b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].value != b[i].value || a[i].method != b[i].method || a[i].totals_dbm != b[i].totals_dbm ||
            a[i].fullarray_rate != b[i].fullarray_rate || a[i].feasible_rate != b[i].feasible_rate)
            return false;
    return true;
}
} // namespace

TEST_CASE("apply_axis")
{
    ScenarioConfig base;
    CHECK(apply_axis(base, SweepAxis::bandwidth, 1e8).backhaul_bandwidth == 1e8);
    CHECK(apply_axis(base, SweepAxis::elements, 400).ris.n_elements == 400);
    CHECK(apply_axis(base, SweepAxis::distance, 1500).center == Vec2{1500, 0});
    CHECK(apply_axis(base, SweepAxis::height, 200).ris.altitude == 200);
    CHECK_THROWS_AS(apply_axis(base, SweepAxis::elements, 2.5), DomainError);
    CHECK(parse_axis("height") == SweepAxis::height);
    CHECK_FALSE(parse_axis("width").has_value());
}

TEST_CASE("median")
{
    CHECK(median({3, 1, 2}) == 2);
    CHECK(median({4, 1, 2, 3}) == 2.5);
    CHECK(std::isnan(median({})));
}

TEST_CASE("sweeps are deterministic and thread-count invariant")
{
    ScenarioConfig base;
    base.n_users = 40;
    SweepSpec spec;
    spec.axis = SweepAxis::bandwidth;
    spec.values = {100e6, 25e6, 50e6};
    spec.trials = 6;
    spec.seed = 9;
    const std::vector<Method> methods(std::begin(all_methods), std::end(all_methods));
    const auto one = monte_carlo(base, spec, methods, 1);
    const auto many = monte_carlo(base, spec, methods, 4);
    const auto again = monte_carlo(base, spec, methods, 4);
    CHECK(same_rows(one, many));
    CHECK(same_rows(many, again));
    REQUIRE(one.size() == 3 * methods.size());
    CHECK(one[0].value == 25e6);
    CHECK(one[0].method == Method::proposed);
    CHECK(one[0].trials == 6);
    CHECK(one[0].seed == 9);

    // Proposed median power never rises with more bandwidth.
    double prev = INFINITY;
    for (const auto &r : one)
        if (r.method == Method::proposed)
        {
            CHECK(r.median_dbm <= prev + 1e-9);
            prev = r.median_dbm;
        }
}

TEST_CASE("parallel_for covers every index once")
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; }, 3);
    for (int h : hits)
        CHECK(h == 1);
}
