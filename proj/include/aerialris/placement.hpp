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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "aerialris/geometry.hpp"
#include "aerialris/uav.hpp"

namespace aerialris
{

// Normalized geometry of the per-UAV numerator problem.  With xi = 1/2 + t the
// stationarity condition of f(xi) = (xi^2 + zeta1^2)((1 - xi)^2 + zeta2^2)
// becomes the depressed cubic t^3 + a t + b = 0.
struct CubicGeometry
{
    double zeta1 = 0.0;
    double zeta2 = 0.0;
    double a = 0.0;
    double b = 0.0;

    double discriminant() const { return (a / 3.0) * (a / 3.0) * (a / 3.0) + (b / 2.0) * (b / 2.0); }
};

CubicGeometry cubic_geometry(double ris_altitude, double uav_altitude, double w_norm);

// f(xi) / ||w||^4.
double numerator_objective(double xi, const CubicGeometry &g);

// The three real stationary points, index k as in the trigonometric formula
// (descending order).  Throws GeometryRegimeError if they are not all real.
std::array<double, 3> cubic_roots(const CubicGeometry &g);

// Smallest stationary point: the near-source local minimizer xi_m.
double xi_solve(double ris_altitude, double uav_altitude, double w_norm);

// q_m* = xi_m w_m.
Vec2 per_uav_point(const UavBs &uav, double ris_altitude);

struct WeiszfeldProblem
{
    std::vector<Vec3> anchors;
    std::vector<double> weights;
    double tolerance = 1e-6; // m
    std::size_t max_iterations = 100000;
};

struct WeiszfeldResult
{
    Vec3 point;
    std::size_t iterations = 0;
    bool at_anchor = false;
    std::size_t anchor_index = 0;
    bool collinear = false; // anchors violate the general-position assumption
};

// Weighted sum of distances and its (sub)gradient norm at x, normalized by the weight sum.
double weiszfeld_objective(const WeiszfeldProblem &p, const Vec3 &x);
double weiszfeld_gradient_norm(const WeiszfeldProblem &p, const Vec3 &x);

// ||sum_{j != i} w_j (z_j - z_i) / ||z_j - z_i|| ||; anchors coincident with z_i are skipped.
double anchor_residual(const WeiszfeldProblem &p, std::size_t i);

// Weighted geometric median.  Starts from the weighted centroid unless
// `initial` is given.
WeiszfeldResult weiszfeld(const WeiszfeldProblem &p);
WeiszfeldResult weiszfeld(const WeiszfeldProblem &p, const Vec3 &initial);

// Unit-weight geometric median of the per-UAV points.
Vec2 aggregate_q(std::span<const Vec2> points);

} // namespace aerialris
