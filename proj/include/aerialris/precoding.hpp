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

#include "aerialris/channel.hpp"

namespace aerialris
{

// Contiguous element window [first, first + count) of the RIS array.
struct ElementRange
{
    std::size_t first = 0;
    std::size_t count = 0;

    std::size_t end() const { return first + count; }
};

struct PhaseProfile
{
    std::vector<double> phases; // radians in [0, 2 pi)
    double reference_phase = 0.0;
};

// a_s / ||a_s||, the source precoder toward the RIS.
ComplexMatrix mrt_vector(const Vec3 &ris_pos, const SourceConfig &source);

// Writes the coherent-alignment phases toward `align` into the elements of
// `range`; everything outside the window keeps its current value.  Element
// indices are global, so sub-array windows continue the same progression.
void apply_phase_profile(PhaseProfile &profile, const Vec3 &ris_pos, const Vec3 &align, const RisConfig &ris,
                         ElementRange range);

// Fresh N-length profile aligned to a single point.
PhaseProfile phase_profile(const Vec3 &ris_pos, const Vec3 &align, const RisConfig &ris,
                           double reference_phase = 0.0);

// diag(exp(j theta_n)).
ComplexMatrix phase_matrix(const PhaseProfile &profile);

// |h^* Theta H v|^2 P G_s / sigma^2 summed only over elements in `window`.
// An empty window means the whole array.
double matrix_snr(double power_w, const LinkBudget &budget, const LosChannels &ch, std::size_t uav_index,
                  const PhaseProfile &profile, const ComplexMatrix &precoder, ElementRange window = {});

} // namespace aerialris
