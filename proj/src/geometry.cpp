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

#include "aerialris/geometry.hpp"
#include "aerialris/error.hpp"

#include <string>

namespace aerialris
{

namespace
{
double axis_cosine(const Vec3 &d, const char *what)
{
    const double n = d.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError(std::string(what) + ": zero-length or non-finite link vector");
    return d.x / n;
}
} // namespace

double distance(const Vec3 &a, const Vec3 &b) { return (a - b).norm(); }

double sin_aod_ris(const Vec3 &ris_pos, const Vec3 &target)
{
    return axis_cosine(target - ris_pos, "sin_aod_ris");
}

double sin_aoa_source(const Vec3 &ris_pos)
{
    return axis_cosine(Vec3{} - ris_pos, "sin_aoa_source");
}

double sin_aod_source(const Vec3 &ris_pos)
{
    return axis_cosine(ris_pos, "sin_aod_source");
}

double sin_aod_deviation(const Vec3 &ris_pos, const Vec3 &uav, const Vec3 &align)
{
    return sin_aod_ris(ris_pos, uav) - sin_aod_ris(ris_pos, align);
}

} // namespace aerialris
