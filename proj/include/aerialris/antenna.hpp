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

#include "aerialris/channel.hpp"

namespace aerialris
{

// Source element gain in dB at vertical angle theta in [0, 180] and
// horizontal angle phi in [-180, 180), both in degrees from boresight
// (theta = 90, phi = 0).
double antenna_gain(double theta_deg, double phi_deg, const AntennaPattern &pattern);

// Linear gain toward the RIS with boresight steered at it.
double source_gain_toward_ris(const AntennaPattern &pattern);

} // namespace aerialris
