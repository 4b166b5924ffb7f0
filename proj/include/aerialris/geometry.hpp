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

#include <cmath>

namespace aerialris
{

// Horizontal-plane location in meters.
struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(const Vec2 &o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2 &o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Vec2 &) const = default;

    double norm() const { return std::hypot(x, y); }
};

// 3D position in meters; z is altitude above the ground plane.
struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 &operator+=(const Vec3 &o)
    {
        x += o.x, y += o.y, z += o.z;
        return *this;
    }
    constexpr bool operator==(const Vec3 &) const = default;

    constexpr double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    constexpr double squared_norm() const { return dot(*this); }
    constexpr Vec2 horizontal() const { return {x, y}; }
};

constexpr Vec3 lift(const Vec2 &p, double z) { return {p.x, p.y, z}; }

double distance(const Vec3 &a, const Vec3 &b);

// The RIS and source ULAs both lie along the x-axis, so every array phase term
// depends only on the direction cosine of a link along x.

// sin of the RIS departure angle toward `target`.
double sin_aod_ris(const Vec3 &ris_pos, const Vec3 &target);

// sin of the arrival angle at the RIS of the link from the source at the origin.
double sin_aoa_source(const Vec3 &ris_pos);

// sin of the departure angle at the source (origin) toward the RIS.
double sin_aod_source(const Vec3 &ris_pos);

// sin_aod_ris(uav) - sin_aod_ris(align), without linearization.
double sin_aod_deviation(const Vec3 &ris_pos, const Vec3 &uav, const Vec3 &align);

} // namespace aerialris
