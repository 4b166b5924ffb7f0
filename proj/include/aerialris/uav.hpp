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
#include <vector>

#include "aerialris/geometry.hpp"

namespace aerialris
{

// One aerial base station: its position rho_m = (w_m, h_m), the fronthaul
// throughput C_m it must receive over the backhaul, and the users it serves.
struct UavBs
{
    Vec3 position;
    double throughput = 0.0; // bits/s
    std::vector<std::size_t> served_users;
};

} // namespace aerialris
