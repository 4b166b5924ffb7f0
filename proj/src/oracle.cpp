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

#include "aerialris/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aerialris/error.hpp"
#include "aerialris/pipeline.hpp"

namespace aerialris
{

namespace
{
void guard(std::size_t points, const char *what)
{
    if (points > oracle_grid_limit)
        throw ResourceGuardError(std::string("oracle: ") + what + " grid has " + std::to_string(points) +
                                 " points, above the limit of " + std::to_string(oracle_grid_limit) +
                                 "; use a smaller --resolution");
}

double lin(double lo, double hi, std::size_t i, std::size_t n)
{
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * double(i) / double(n - 1);
}
} // namespace

std::vector<Vec2> oracle_q_grid(double radius, std::size_t resolution)
{
    if (resolution < 2)
        throw DomainError("oracle: resolution must be >= 2");
    guard(1 + (resolution - 1) * resolution, "placement");
    std::vector<Vec2> g{{0.0, 0.0}};
    for (std::size_t i = 1; i < resolution; ++i)
    {
        const double r = radius * double(i) / double(resolution - 1);
        for (std::size_t j = 0; j < resolution; ++j)
        {
            const double t = lin(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi, j, resolution);
            g.push_back({r * std::cos(t), r * std::sin(t)});
        }
    }
    return g;
}

std::vector<Vec3> oracle_align_grid(const std::vector<UavBs> &uavs, std::size_t resolution)
{
    if (resolution < 2)
        throw DomainError("oracle: resolution must be >= 2");
    if (uavs.empty())
        throw DomainError("oracle: no UAV-BSs");
    guard(resolution * resolution * resolution, "align-point");
    Vec3 lo = uavs[0].position, hi = lo;
    for (const UavBs &u : uavs)
    {
        lo = {std::min(lo.x, u.position.x), std::min(lo.y, u.position.y), std::min(lo.z, u.position.z)};
        hi = {std::max(hi.x, u.position.x), std::max(hi.y, u.position.y), std::max(hi.z, u.position.z)};
    }
    const double side = std::max({hi.x - lo.x, hi.y - lo.y, hi.z - lo.z});
    const Vec3 mid = (lo + hi) * 0.5;
    const Vec3 a = mid - Vec3{side, side, side} * 0.5;
    const Vec3 b = mid + Vec3{side, side, side} * 0.5;
    std::vector<Vec3> g;
    g.reserve(resolution * resolution * resolution);
    for (std::size_t i = 0; i < resolution; ++i)
        for (std::size_t j = 0; j < resolution; ++j)
            for (std::size_t k = 0; k < resolution; ++k)
            {
                const Vec3 p{lin(a.x, b.x, i, resolution), lin(a.y, b.y, j, resolution),
                             lin(a.z, b.z, k, resolution)};
                if (p.z >= 0.0)
                    g.push_back(p);
            }
    return g;
}

OracleResult exhaustive_oracle(const Scenario &sc, std::size_t resolution, const KernelTable &kernels)
{
    const auto &cfg = sc.config;
    double w_max = 0.0;
    for (const UavBs &u : sc.uavs)
        w_max = std::max(w_max, u.position.horizontal().norm());
    const auto qs = oracle_q_grid(cfg.delta * w_max, resolution);
    const auto cube = oracle_align_grid(sc.uavs, resolution);
    const LinkBudget budget = scenario_budget(sc);

    std::vector<double> cx(cube.size()), cy(cube.size()), cz(cube.size());
    for (std::size_t j = 0; j < cube.size(); ++j)
        cx[j] = cube[j].x, cy[j] = cube[j].y, cz[j] = cube[j].z;

    const std::size_t m0 = sc.uavs.size();
    const double n = double(cfg.ris.n_elements);
    std::vector<double> coeff(m0), s(m0), sbar(cube.size()), total(cube.size());
    OracleResult best;
    double best_total = std::numeric_limits<double>::infinity();
    std::size_t best_q = 0, best_j = 0;
    for (std::size_t iq = 0; iq < qs.size(); ++iq)
    {
        const Vec3 ris_pos = lift(qs[iq], cfg.ris.altitude);
        for (std::size_t m = 0; m < m0; ++m)
        {
            coeff[m] = bound_coefficient(budget, ris_pos, sc.uavs[m]);
            s[m] = sin_aod_ris(ris_pos, sc.uavs[m].position);
        }
        kernels.direction_cosines(cx.data(), cy.data(), cz.data(), sbar.data(), cube.size(), ris_pos.x, ris_pos.y,
                                  ris_pos.z);
        kernels.inverse_gain_sum(coeff.data(), s.data(), m0, sbar.data(), total.data(), cube.size(), n,
                                 cfg.ris.element_spacing_norm);
        best.evaluations += cube.size();
        for (std::size_t j = 0; j < cube.size(); ++j)
            if (total[j] < best_total) // NaN (align point on the RIS) never wins
            {
                best_total = total[j];
                best_q = iq;
                best_j = j;
            }
    }
    if (!std::isfinite(best_total))
        throw NullGainError("oracle: every grid point puts some UAV-BS on an array null");

    best.q = qs[best_q];
    best.align = cube[best_j];
    const Vec3 ris_pos = lift(best.q, cfg.ris.altitude);
    std::vector<double> dev(m0);
    std::vector<std::size_t> full(m0, cfg.ris.n_elements);
    for (std::size_t m = 0; m < m0; ++m)
        dev[m] = sin_aod_deviation(ris_pos, sc.uavs[m].position, best.align);
    best.power = powers_from_deviations(budget, ris_pos, sc.uavs, dev, full, cfg.ris.element_spacing_norm,
                                        cfg.source.max_power_w);
    return best;
}

} // namespace aerialris
