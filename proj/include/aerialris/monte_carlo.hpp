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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aerialris/pipeline.hpp"
#include "aerialris/scenario.hpp"

namespace aerialris
{

enum class SweepAxis
{
    bandwidth, // backhaul bandwidth, Hz
    elements,  // RIS element count
    distance,  // |rho_G| along x, m
    height     // RIS altitude, m
};

const char *to_string(SweepAxis a);
std::optional<SweepAxis> parse_axis(const std::string &name);

// Copy of `base` with the swept parameter set to `value`.
ScenarioConfig apply_axis(const ScenarioConfig &base, SweepAxis axis, double value);

struct SweepSpec
{
    SweepAxis axis = SweepAxis::bandwidth;
    std::vector<double> values;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

struct TrialOutcome
{
    double total_w = 0.0; // +inf when the method failed
    bool full_array = false;
    bool feasible = false;
    std::string error;
};

TrialOutcome evaluate_trial(const Scenario &sc, Method m);

struct SweepRow
{
    SweepAxis axis = SweepAxis::bandwidth;
    double value = 0.0;
    Method method = Method::proposed;
    double mean_dbm = 0.0;   // mean of per-trial totals in dBm
    double median_dbm = 0.0;
    double fullarray_rate = 0.0;
    double feasible_rate = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> totals_dbm; // per trial, trial order
};

// Trial t uses scenario seed derive_seed(spec.seed, t) at every sweep value,
// so each column sees the same user layouts.  Rows are ordered by ascending
// value, then method order; thread count never changes the result.
std::vector<SweepRow> monte_carlo(const ScenarioConfig &base, const SweepSpec &spec,
                                  const std::vector<Method> &methods, std::size_t threads = 0);

// Runs fn(i) for i in [0, count) on a pool of worker threads.  0 threads means
// hardware concurrency.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn, std::size_t threads = 0);

double median(std::vector<double> v);

} // namespace aerialris
