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

#include "aerialris/channel.hpp"
#include "aerialris/kernels.hpp"

#include <cmath>

namespace aerialris
{

namespace
{

void array_gain(const double *dev, double *out, std::size_t count, double n_active, double spacing_norm)
{
    const auto n = static_cast<std::size_t>(n_active);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = beamforming_gain(n, spacing_norm, dev[i]);
}

void direction_cosines(const double *x, const double *y, const double *z, double *out, std::size_t count,
                       double ox, double oy, double oz)
{
    for (std::size_t i = 0; i < count; ++i)
    {
        const double dx = x[i] - ox, dy = y[i] - oy, dz = z[i] - oz;
        out[i] = dx / std::sqrt(dx * dx + dy * dy + dz * dz);
    }
}

void inverse_gain_sum(const double *coeff, const double *s, std::size_t m_count, const double *sbar, double *out,
                      std::size_t count, double n_active, double spacing_norm)
{
    const auto n = static_cast<std::size_t>(n_active);
    for (std::size_t j = 0; j < count; ++j)
    {
        double acc = 0.0;
        for (std::size_t m = 0; m < m_count; ++m)
            acc += coeff[m] / beamforming_gain(n, spacing_norm, s[m] - sbar[j]);
        out[j] = acc;
    }
}

constexpr KernelTable table{"scalar", array_gain, direction_cosines, inverse_gain_sum};

} // namespace

const KernelTable &scalar_kernels() { return table; }

} // namespace aerialris
