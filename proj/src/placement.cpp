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

#include "aerialris/placement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "aerialris/error.hpp"

namespace aerialris
{

using std::numbers::pi;

CubicGeometry cubic_geometry(double ris_altitude, double uav_altitude, double w_norm)
{
    if (!(w_norm > 0.0) || !std::isfinite(w_norm))
        throw DomainError("cubic_geometry: UAV ground distance must be positive");
    if (!(ris_altitude > 0.0))
        throw DomainError("cubic_geometry: RIS altitude must be positive");
    CubicGeometry g;
    g.zeta1 = ris_altitude / w_norm;
    g.zeta2 = std::abs(ris_altitude - uav_altitude) / w_norm;
    g.a = 0.5 * (g.zeta1 * g.zeta1 + g.zeta2 * g.zeta2) - 0.25;
    g.b = 0.25 * (g.zeta2 * g.zeta2 - g.zeta1 * g.zeta1);
    return g;
}

double numerator_objective(double xi, const CubicGeometry &g)
{
    const double u = 1.0 - xi;
    return (xi * xi + g.zeta1 * g.zeta1) * (u * u + g.zeta2 * g.zeta2);
}

std::array<double, 3> cubic_roots(const CubicGeometry &g)
{
    if (!(g.a < 0.0))
        throw GeometryRegimeError("xi_solve: geometry out of asymptotic regime (a >= 0); increase the UAV ground distance");
    if (!(g.discriminant() < 0.0))
        throw GeometryRegimeError("xi_solve: geometry out of asymptotic regime (cubic has a single real root)");
    const double r = 2.0 * std::sqrt(-g.a / 3.0);
    const double arg = std::clamp(1.5 * g.b / g.a * std::sqrt(-3.0 / g.a), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    std::array<double, 3> roots{};
    for (int k = 0; k < 3; ++k)
        roots[k] = 0.5 + r * std::cos(phi - 2.0 * pi * k / 3.0);
    return roots;
}

double xi_solve(double ris_altitude, double uav_altitude, double w_norm)
{
    const auto roots = cubic_roots(cubic_geometry(ris_altitude, uav_altitude, w_norm));
#ifndef NDEBUG
    if (!(roots[0] >= roots[1] && roots[1] >= roots[2]))
        throw GeometryRegimeError("xi_solve: unexpected root ordering");
#endif
    return roots[2];
}

Vec2 per_uav_point(const UavBs &uav, double ris_altitude)
{
    const Vec2 w = uav.position.horizontal();
    return w * xi_solve(ris_altitude, uav.position.z, w.norm());
}

namespace
{

void validate(const WeiszfeldProblem &p)
{
    if (p.anchors.empty())
        throw DomainError("weiszfeld: at least one anchor required");
    if (p.weights.size() != p.anchors.size())
        throw DomainError("weiszfeld: weights and anchors differ in length");
    for (double w : p.weights)
        if (!(w > 0.0) || !std::isfinite(w))
            throw DomainError("weiszfeld: weights must be positive and finite");
    if (!(p.tolerance > 0.0))
        throw DomainError("weiszfeld: tolerance must be positive");
}

constexpr double coincide_eps = 1e-12;

double diameter(const std::vector<Vec3> &z)
{
    double d = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            d = std::max(d, distance(z[i], z[j]));
    return d;
}

bool anchors_collinear(const std::vector<Vec3> &z)
{
    if (z.size() < 3)
        return false;
    auto farthest = [&](const Vec3 &from) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < z.size(); ++i)
            if (distance(z[i], from) > distance(z[best], from))
                best = i;
        return best;
    };
    const Vec3 a = z[farthest(z[0])];
    const Vec3 b = z[farthest(a)];
    const Vec3 dir = b - a;
    const double len = dir.norm();
    if (len == 0.0)
        return true;
    for (const Vec3 &p : z)
    {
        const Vec3 d = p - a;
        const double along = d.dot(dir) / len;
        const double off = std::sqrt(std::max(0.0, d.squared_norm() - along * along));
        if (off > 1e-9 * len)
            return false;
    }
    return true;
}

// Weight of anchor i plus any anchors sitting on top of it.
double merged_weight(const WeiszfeldProblem &p, std::size_t i)
{
    double w = 0.0;
    for (std::size_t j = 0; j < p.anchors.size(); ++j)
        if (distance(p.anchors[j], p.anchors[i]) < coincide_eps)
            w += p.weights[j];
    return w;
}

Vec3 nudge(const Vec3 &x, double scale, std::size_t attempt)
{
    // Irrational-ish directions so repeated restarts do not retrace each other.
    const double t = 2.399963229728653 * double(attempt + 1);
    const Vec3 dir{std::cos(t), std::sin(t), 0.5 * std::cos(0.7 * t)};
    return x + dir * (scale / dir.norm());
}

} // namespace

double anchor_residual(const WeiszfeldProblem &p, std::size_t i)
{
    Vec3 s;
    for (std::size_t j = 0; j < p.anchors.size(); ++j)
    {
        const Vec3 d = p.anchors[j] - p.anchors[i];
        const double n = d.norm();
        if (n < coincide_eps)
            continue;
        s += d * (p.weights[j] / n);
    }
    return s.norm();
}

double weiszfeld_objective(const WeiszfeldProblem &p, const Vec3 &x)
{
    double f = 0.0;
    for (std::size_t i = 0; i < p.anchors.size(); ++i)
        f += p.weights[i] * distance(x, p.anchors[i]);
    return f;
}

double weiszfeld_gradient_norm(const WeiszfeldProblem &p, const Vec3 &x)
{
    Vec3 g;
    double wsum = 0.0;
    for (std::size_t i = 0; i < p.anchors.size(); ++i)
    {
        wsum += p.weights[i];
        const Vec3 d = x - p.anchors[i];
        const double n = d.norm();
        if (n < coincide_eps)
            continue;
        g += d * (p.weights[i] / n);
    }
    return g.norm() / wsum;
}

WeiszfeldResult weiszfeld(const WeiszfeldProblem &p)
{
    validate(p);
    Vec3 c;
    double wsum = 0.0;
    for (std::size_t i = 0; i < p.anchors.size(); ++i)
    {
        c += p.anchors[i] * p.weights[i];
        wsum += p.weights[i];
    }
    c = c * (1.0 / wsum);
    const double diam = diameter(p.anchors);
    for (const Vec3 &z : p.anchors)
        if (distance(c, z) < coincide_eps)
        {
            c = nudge(c, 1e-6 * diam, 0);
            break;
        }
    return weiszfeld(p, c);
}

WeiszfeldResult weiszfeld(const WeiszfeldProblem &p, const Vec3 &initial)
{
    validate(p);
    WeiszfeldResult res;
    res.collinear = anchors_collinear(p.anchors);

    const std::size_t n = p.anchors.size();
    // Strict test: at equality (e.g. two equal weights) the minimizer set is a
    // segment and the iteration returns its symmetric point instead.  The
    // margin keeps a rounded unit vector from counting as strictly shorter.
    for (std::size_t i = 0; i < n; ++i)
        if (anchor_residual(p, i) < merged_weight(p, i) * (1.0 - 1e-12))
        {
            res.point = p.anchors[i];
            res.at_anchor = true;
            res.anchor_index = i;
            return res;
        }

    const double diam = diameter(p.anchors);
    std::size_t restarts = 0;
    Vec3 x = initial;
    for (std::size_t it = 1; it <= p.max_iterations; ++it)
    {
        Vec3 num;
        double den = 0.0;
        std::size_t hit = n;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double d = distance(x, p.anchors[i]);
            if (d < coincide_eps)
            {
                hit = i;
                break;
            }
            num += p.anchors[i] * (p.weights[i] / d);
            den += p.weights[i] / d;
        }
        if (hit < n)
        {
            if (anchor_residual(p, hit) <= merged_weight(p, hit))
            {
                res.point = p.anchors[hit];
                res.at_anchor = true;
                res.anchor_index = hit;
                res.iterations = it;
                return res;
            }
            x = nudge(p.anchors[hit], 1e-6 * diam, ++restarts);
            continue;
        }
        const Vec3 next = num * (1.0 / den);
        if (distance(next, x) <= p.tolerance)
        {
            res.point = next;
            res.iterations = it;
            return res;
        }
        x = next;
    }
    throw ConvergenceError("weiszfeld: no convergence within " + std::to_string(p.max_iterations) + " iterations",
                           x.x, x.y, x.z);
}

Vec2 aggregate_q(std::span<const Vec2> points)
{
    if (points.empty())
        throw DomainError("aggregate_q: no per-UAV points");
    WeiszfeldProblem p;
    for (const Vec2 &q : points)
        p.anchors.push_back(lift(q, 0.0));
    p.weights.assign(points.size(), 1.0);
    return weiszfeld(p).point.horizontal();
}

} // namespace aerialris
