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
#include <string_view>

namespace aerialris
{

// Batched inner loops behind the exhaustive search and the Monte-Carlo
// harness.  Each table entry has a scalar reference and, where the CPU
// allows, an AVX2/FMA variant.  Variants agree with the reference to within
// a few ulp of the sine evaluations; see tests/test_kernels.cpp.
struct KernelTable
{
    const char *name;

    // out[i] = beamforming gain of an n_active-element array at deviation dev[i].
    void (*array_gain)(const double *dev, double *out, std::size_t count, double n_active, double spacing_norm);

    // out[i] = (x[i] - ox) / ||p_i - o||: direction cosine along the array axis
    // of the link from o to each point (structure-of-arrays input).
    void (*direction_cosines)(const double *x, const double *y, const double *z, double *out, std::size_t count,
                              double ox, double oy, double oz);

    // out[j] = sum_m coeff[m] / g(s[m] - sbar[j]).
    void (*inverse_gain_sum)(const double *coeff, const double *s, std::size_t m_count, const double *sbar,
                             double *out, std::size_t count, double n_active, double spacing_norm);
};

const KernelTable &scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable *avx2_kernels();

// Chosen once per process: AVX2 when available, unless the environment
// variable AERIALRIS_KERNELS is set to "scalar" (or "avx2" to insist).
const KernelTable &active_kernels();

// Lookup by name ("scalar", "avx2"); nullptr if unknown or unsupported here.
const KernelTable *kernel_table(std::string_view name);

namespace detail
{
// Raw table of the AVX2 translation unit; callers go through avx2_kernels().
const KernelTable *avx2_table();
} // namespace detail

} // namespace aerialris
