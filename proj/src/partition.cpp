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

#include "aerialris/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "aerialris/error.hpp"

namespace aerialris
{

const char *to_string(ArrayMode mode) { return mode == ArrayMode::full ? "full" : "sub"; }

std::vector<ElementRange> PartitionPlan::element_ranges() const
{
    std::vector<ElementRange> out;
    std::size_t first = 0;
    for (std::size_t n : sizes_integer)
    {
        out.push_back({first, n});
        first += n;
    }
    return out;
}

std::vector<double> cosine_weights(const Vec3 &ris_pos, std::span<const UavBs> uavs)
{
    std::vector<double> w;
    w.reserve(uavs.size());
    for (const UavBs &u : uavs)
    {
        const double s = sin_aod_ris(ris_pos, u.position);
        w.push_back(std::max(1e-12, std::sqrt(std::max(0.0, 1.0 - s * s))));
    }
    return w;
}

WeiszfeldResult align_point_full(const Vec2 &q_star, double ris_altitude, std::span<const UavBs> uavs)
{
    if (uavs.empty())
        throw DomainError("align_point_full: no UAV-BSs");
    WeiszfeldProblem p;
    for (const UavBs &u : uavs)
        p.anchors.push_back(u.position);
    p.weights = cosine_weights(lift(q_star, ris_altitude), uavs);
    return weiszfeld(p);
}

StructureDecision structure_decision(const Vec3 &ris_pos, const Vec3 &align, std::span<const UavBs> uavs,
                                     const RisConfig &ris)
{
    StructureDecision d;
    for (const UavBs &u : uavs)
        d.max_deviation = std::max(d.max_deviation, std::abs(sin_aod_deviation(ris_pos, u.position, align)));
    d.threshold = 0.5 * hpbw(ris.n_elements, ris.element_spacing_norm);
    d.mode = d.max_deviation > d.threshold ? ArrayMode::sub : ArrayMode::full;
    return d;
}

std::vector<std::size_t> divide_sets(std::span<const double> deviations, double max_deviation, std::size_t L)
{
    if (deviations.empty())
        throw DomainError("divide_sets: no UAV-BSs");
    if (L < 1)
        throw DomainError("divide_sets: L must be >= 1");
    if (!(max_deviation > 0.0))
        throw DomainError("divide_sets: maximum deviation must be positive");
    std::vector<std::size_t> bin(deviations.size());
    const double l = double(L);
    for (std::size_t m = 0; m < deviations.size(); ++m)
    {
        // 1-based i with dev in (max/L (2(i-1) - L), max/L (2i - L)].
        const double i = std::ceil(0.5 * l * (deviations[m] / max_deviation + 1.0));
        bin[m] = std::size_t(std::clamp(i, 1.0, l)) - 1;
    }
    return bin;
}

std::vector<std::size_t> divide_sets(std::span<const UavBs> uavs, const Vec3 &align, const Vec3 &ris_pos,
                                     std::size_t L)
{
    std::vector<double> dev;
    double max_dev = 0.0;
    for (const UavBs &u : uavs)
    {
        dev.push_back(sin_aod_deviation(ris_pos, u.position, align));
        max_dev = std::max(max_dev, std::abs(dev.back()));
    }
    return divide_sets(dev, max_dev, L);
}

namespace
{
double sum_at(std::span<const double> s, double mu, double cap)
{
    double total = 0.0;
    for (double v : s)
        total += std::min(cap, std::cbrt(2.0 * v / mu));
    return total;
}
} // namespace

SizeSolution partition_sizes(std::span<const double> subset_sums, double n_total, double cap)
{
    const std::size_t L = subset_sums.size();
    if (L < 1)
        throw PartitionError("partition_sizes: no subsets");
    if (!(n_total > 0.0))
        throw PartitionError("partition_sizes: element count must be positive");
    for (double s : subset_sums)
        if (!(s > 0.0) || !std::isfinite(s))
            throw PartitionError("partition_sizes: bound coefficients must be positive");
    if (double(L) * cap < n_total * (1.0 - 1e-12))
        throw PartitionError("partition_sizes: outlier cap infeasible, L k N = " + std::to_string(double(L) * cap) +
                             " < N = " + std::to_string(n_total));

    SizeSolution sol;
    sol.sizes.assign(L, cap);
    sol.capped.assign(L, true);
    if (double(L) * cap <= n_total * (1.0 + 1e-12))
    {
        sol.mu = 0.0;
        return sol;
    }

    // Bracket mu: at lo every root is at least the cap, at hi every root is
    // at most N / L, so the sum crosses N in between.
    const auto [smin, smax] = std::minmax_element(subset_sums.begin(), subset_sums.end());
    const double l = double(L);
    double lo = std::log(2.0 * *smin / (cap * cap * cap));
    double hi = std::log(2.0 * *smax * (l / n_total) * (l / n_total) * (l / n_total));
    if (lo > hi)
        std::swap(lo, hi);
    lo -= 1.0;
    hi += 1.0;
    for (int it = 0; it < 200; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        const double s = sum_at(subset_sums, std::exp(mid), cap);
        if (std::abs(s - n_total) <= 1e-12 * n_total)
        {
            lo = hi = mid;
            break;
        }
        if (s > n_total)
            lo = mid;
        else
            hi = mid;
    }
    double mu = std::exp(0.5 * (lo + hi));

    // Polish: with the capped set fixed, the uncapped sizes are proportional
    // to cbrt(S_i) and must absorb exactly what the caps leave.
    for (std::size_t i = 0; i < L; ++i)
        sol.capped[i] = std::cbrt(2.0 * subset_sums[i] / mu) >= cap;
    for (;;)
    {
        double rest = n_total, weight = 0.0;
        for (std::size_t i = 0; i < L; ++i)
            if (sol.capped[i])
                rest -= cap;
            else
                weight += std::cbrt(subset_sums[i]);
        bool grew = false;
        for (std::size_t i = 0; i < L; ++i)
            if (!sol.capped[i])
            {
                sol.sizes[i] = rest * std::cbrt(subset_sums[i]) / weight;
                if (sol.sizes[i] > cap)
                {
                    sol.capped[i] = true;
                    sol.sizes[i] = cap;
                    grew = true;
                }
            }
        if (!grew || weight == 0.0)
            break;
    }
    sol.mu = 0.0;
    for (std::size_t i = 0; i < L; ++i)
        if (!sol.capped[i])
        {
            const double n = sol.sizes[i];
            sol.mu = 2.0 * subset_sums[i] / (n * n * n);
            break;
        }
    return sol;
}

double partition_objective(std::span<const double> subset_sums, std::span<const double> sizes)
{
    double f = 0.0;
    for (std::size_t i = 0; i < subset_sums.size(); ++i)
        f += subset_sums[i] / (sizes[i] * sizes[i]);
    return f;
}

std::vector<std::size_t> round_sizes(std::span<const double> sizes, std::size_t n_total)
{
    const std::size_t L = sizes.size();
    if (L == 0 || L > n_total)
        throw PartitionError("round_sizes: cannot give every sub-array at least one element");
    std::vector<std::size_t> out(L);
    std::vector<double> frac(L);
    std::size_t used = 0;
    for (std::size_t i = 0; i < L; ++i)
    {
        const double f = std::floor(std::max(0.0, sizes[i]));
        out[i] = std::size_t(f);
        frac[i] = sizes[i] - f;
        used += out[i];
    }
    std::vector<std::size_t> order(L);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t k = 0; used < n_total; k = (k + 1) % L)
    {
        ++out[order[k]];
        ++used;
    }
    while (used > n_total)
    {
        const auto big = std::max_element(out.begin(), out.end());
        --*big;
        --used;
    }
    for (std::size_t i = 0; i < L; ++i)
        if (out[i] == 0)
        {
            const auto big = std::max_element(out.begin(), out.end());
            --*big;
            out[i] = 1;
        }
    return out;
}

PartitionPlan search_L(std::span<const UavBs> uavs, const Vec3 &align, const Vec3 &ris_pos,
                       std::span<const double> bound_coeffs, const RisConfig &ris, std::size_t l_max)
{
    if (l_max < 2)
        throw PartitionError("search_L: L_max must be >= 2");
    if (bound_coeffs.size() != uavs.size())
        throw PartitionError("search_L: one bound coefficient per UAV-BS required");

    std::vector<double> dev;
    double max_dev = 0.0;
    for (const UavBs &u : uavs)
    {
        dev.push_back(sin_aod_deviation(ris_pos, u.position, align));
        max_dev = std::max(max_dev, std::abs(dev.back()));
    }
    if (!(max_dev > 0.0))
        throw PartitionError("search_L: all UAV-BSs at zero deviation, sub-array split undefined");

    const double n = double(ris.n_elements);
    const double half_beam = 0.5 * hpbw(ris.n_elements, ris.element_spacing_norm);
    PartitionPlan best;
    bool found = false;
    std::string last_error;
    for (std::size_t L = 2; L <= l_max; ++L)
    {
        const auto bin = divide_sets(dev, max_dev, L);
        // Drop empty bins and reindex, keeping bin order so sub-array windows
        // follow the deviation axis.
        std::vector<bool> occupied(L, false);
        for (std::size_t b : bin)
            occupied[b] = true;
        std::vector<std::size_t> remap(L, L);
        std::size_t used = 0;
        for (std::size_t b = 0; b < L; ++b)
            if (occupied[b])
                remap[b] = used++;
        std::vector<std::vector<std::size_t>> subsets(used);
        std::vector<std::size_t> subset_of(uavs.size());
        for (std::size_t m = 0; m < uavs.size(); ++m)
        {
            subset_of[m] = remap[bin[m]];
            subsets[subset_of[m]].push_back(m);
        }
        std::vector<double> sums(subsets.size(), 0.0);
        for (std::size_t m = 0; m < uavs.size(); ++m)
            sums[subset_of[m]] += bound_coeffs[m];

        const double k = double(L) * half_beam / max_dev;
        if (double(subsets.size()) * k * n < n * (1.0 - 1e-12))
        {
            last_error = "L = " + std::to_string(L) + ": " + std::to_string(subsets.size()) +
                         " non-empty sub-arrays cannot reach N under cap k N = " + std::to_string(k * n);
            continue;
        }
        SizeSolution sol;
        try
        {
            sol = partition_sizes(sums, n, k * n);
        }
        catch (const PartitionError &e)
        {
            last_error = e.what();
            continue;
        }
        const double obj = partition_objective(sums, sol.sizes);
        if (!found || obj < best.objective * (1.0 - 1e-12))
        {
            found = true;
            best = PartitionPlan{};
            best.mode = ArrayMode::sub;
            best.L = subsets.size();
            best.subset_of_uav = subset_of;
            best.subsets = subsets;
            best.sizes_continuous = sol.sizes;
            best.k = k;
            best.cap = k * n;
            best.max_deviation = max_dev;
            best.objective = obj;
        }
    }
    if (!found)
        throw PartitionError("search_L: no feasible partition for L in 2.." + std::to_string(l_max) + " (" +
                             last_error + ")");
    return best;
}

std::vector<Vec3> subarray_align_points(const std::vector<std::vector<std::size_t>> &subsets,
                                        std::span<const UavBs> uavs, std::span<const double> weights)
{
    std::vector<Vec3> out;
    out.reserve(subsets.size());
    for (const auto &s : subsets)
    {
        if (s.empty())
            throw PartitionError("subarray_align_points: empty subset");
        WeiszfeldProblem p;
        for (std::size_t m : s)
        {
            p.anchors.push_back(uavs[m].position);
            p.weights.push_back(weights[m]);
        }
        out.push_back(weiszfeld(p).point);
    }
    return out;
}

std::vector<std::size_t> hpbw_outliers(const PartitionPlan &plan, std::span<const UavBs> uavs, const Vec3 &ris_pos,
                                       const RisConfig &ris)
{
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < uavs.size(); ++m)
    {
        const std::size_t i = plan.subset_of_uav[m];
        const double dev = sin_aod_deviation(ris_pos, uavs[m].position, plan.align_points[i]);
        if (std::abs(dev) > 0.5 * hpbw(plan.sizes_integer[i], ris.element_spacing_norm))
            out.push_back(m);
    }
    return out;
}

} // namespace aerialris
