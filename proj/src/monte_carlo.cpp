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

#include "aerialris/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "aerialris/error.hpp"
#include "aerialris/random.hpp"

namespace aerialris
{

const char *to_string(SweepAxis a)
{
    switch (a)
    {
    case SweepAxis::bandwidth:
        return "bandwidth";
    case SweepAxis::elements:
        return "elements";
    case SweepAxis::distance:
        return "distance";
    case SweepAxis::height:
        return "height";
    }
    return "?";
}

std::optional<SweepAxis> parse_axis(const std::string &name)
{
    for (SweepAxis a : {SweepAxis::bandwidth, SweepAxis::elements, SweepAxis::distance, SweepAxis::height})
        if (name == to_string(a))
            return a;
    return std::nullopt;
}

ScenarioConfig apply_axis(const ScenarioConfig &base, SweepAxis axis, double value)
{
    ScenarioConfig c = base;
    switch (axis)
    {
    case SweepAxis::bandwidth:
        c.backhaul_bandwidth = value;
        break;
    case SweepAxis::elements:
        if (!(value >= 1.0) || value != std::floor(value))
            throw DomainError("sweep: element count must be a positive integer");
        c.ris.n_elements = std::size_t(value);
        break;
    case SweepAxis::distance:
        c.center = {value, 0.0};
        break;
    case SweepAxis::height:
        c.ris.altitude = value;
        break;
    }
    return c;
}

TrialOutcome evaluate_trial(const Scenario &sc, Method m)
{
    TrialOutcome t;
    try
    {
        const SetupResult r = run_method(sc, m);
        t.total_w = r.power.total;
        t.full_array = r.full_array();
        t.feasible = r.power.feasible;
    }
    catch (const std::exception &e)
    {
        t.total_w = std::numeric_limits<double>::infinity();
        t.error = e.what();
    }
    return t;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn, std::size_t threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

double median(std::vector<double> v)
{
    if (v.empty())
        return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<SweepRow> monte_carlo(const ScenarioConfig &base, const SweepSpec &spec,
                                  const std::vector<Method> &methods, std::size_t threads)
{
    if (spec.values.empty())
        throw DomainError("sweep: no values");
    if (spec.trials < 1)
        throw DomainError("sweep: trials must be >= 1");
    std::vector<double> values = spec.values;
    std::sort(values.begin(), values.end());

    const std::size_t nv = values.size(), nm = methods.size(), nt = spec.trials;
    std::vector<ScenarioConfig> configs;
    for (double v : values)
    {
        configs.push_back(apply_axis(base, spec.axis, v));
        configs.back().validate();
    }

    std::vector<TrialOutcome> cells(nv * nt * nm);
    parallel_for(
        nv * nt,
        [&](std::size_t job) {
            const std::size_t iv = job / nt, t = job % nt;
            const Scenario sc = generate_scenario(configs[iv], derive_seed(spec.seed, t));
            for (std::size_t im = 0; im < nm; ++im)
                cells[(iv * nt + t) * nm + im] = evaluate_trial(sc, methods[im]);
        },
        threads);

    std::vector<SweepRow> rows;
    for (std::size_t iv = 0; iv < nv; ++iv)
        for (std::size_t im = 0; im < nm; ++im)
        {
            SweepRow r;
            r.axis = spec.axis;
            r.value = values[iv];
            r.method = methods[im];
            r.trials = nt;
            r.seed = spec.seed;
            std::size_t full = 0, feasible = 0;
            for (std::size_t t = 0; t < nt; ++t)
            {
                const TrialOutcome &c = cells[(iv * nt + t) * nm + im];
                r.totals_dbm.push_back(std::isfinite(c.total_w) ? watts_to_dbm(c.total_w)
                                                                : std::numeric_limits<double>::infinity());
                full += c.full_array;
                feasible += c.feasible;
            }
            r.mean_dbm = std::accumulate(r.totals_dbm.begin(), r.totals_dbm.end(), 0.0) / double(nt);
            r.median_dbm = median(r.totals_dbm);
            r.fullarray_rate = double(full) / double(nt);
            r.feasible_rate = double(feasible) / double(nt);
            rows.push_back(std::move(r));
        }
    return rows;
}

} // namespace aerialris
