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

#include "aerialris/antenna.hpp"

#include <algorithm>

#include "aerialris/error.hpp"

namespace aerialris
{

double antenna_gain(double theta_deg, double phi_deg, const AntennaPattern &pattern)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
        throw DomainError("antenna_gain: theta must lie in [0, 180] degrees");
    if (!(phi_deg >= -180.0 && phi_deg < 180.0))
        throw DomainError("antenna_gain: phi must lie in [-180, 180) degrees");
    const double v = (theta_deg - 90.0) / pattern.theta_hpbw_deg;
    const double h = phi_deg / pattern.phi_hpbw_deg;
    const double a_v = std::min(12.0 * v * v, pattern.sla_v_db);
    const double a_h = std::min(12.0 * h * h, pattern.a_max_db);
    return pattern.g_max_db - std::min(a_v + a_h, pattern.a_max_db);
}

double source_gain_toward_ris(const AntennaPattern &pattern)
{
    return db_to_linear(antenna_gain(90.0, 0.0, pattern));
}

} // namespace aerialris
