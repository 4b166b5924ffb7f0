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

#include "aerialris/kernels.hpp"

#include <cmath>
#include <immintrin.h>
#include <numbers>

namespace aerialris
{

namespace
{

// Cephes-style double sine: reduce by pi/4 with a three-part pi split, then a
// degree-11 odd / degree-12 even polynomial on [-pi/4, pi/4].
inline __m256d sin_pd(__m256d x)
{
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    const __m256d sign = _mm256_and_pd(x, sign_mask);
    x = _mm256_andnot_pd(sign_mask, x);

    __m256d y = _mm256_floor_pd(_mm256_mul_pd(x, _mm256_set1_pd(4.0 / std::numbers::pi)));
    // Round odd octants up so j is one of 0, 2, 4, 6.
    const __m256d half_y = _mm256_mul_pd(y, _mm256_set1_pd(0.5));
    const __m256d odd = _mm256_cmp_pd(_mm256_floor_pd(half_y), half_y, _CMP_NEQ_OQ);
    y = _mm256_add_pd(y, _mm256_and_pd(odd, _mm256_set1_pd(1.0)));
    const __m256d j = _mm256_sub_pd(y, _mm256_mul_pd(_mm256_set1_pd(8.0),
                                                     _mm256_floor_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.125)))));

    const __m256d z = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_sub_pd(x, _mm256_mul_pd(y, _mm256_set1_pd(7.85398125648498535156E-1))),
                      _mm256_mul_pd(y, _mm256_set1_pd(3.77489470793079817668E-8))),
        _mm256_mul_pd(y, _mm256_set1_pd(2.69515142907905952645E-15)));
    const __m256d zz = _mm256_mul_pd(z, z);

    __m256d ps = _mm256_set1_pd(1.58962301576546568060E-10);
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-2.50507477628578072866E-8));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(2.75573136213857245213E-6));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.98412698295895385996E-4));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(8.33333333332211858878E-3));
    ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.66666666666666307295E-1));
    const __m256d sin_poly = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ps, z);

    __m256d pc = _mm256_set1_pd(-1.13585365213876817300E-11);
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.08757008419747316778E-9));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-2.75573141792967388112E-7));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.48015872888517045348E-5));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-1.38888888888730564116E-3));
    pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(4.16666666666665929218E-2));
    const __m256d cos_poly = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), pc,
                                             _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz, _mm256_set1_pd(1.0)));

    const __m256d use_cos = _mm256_or_pd(_mm256_cmp_pd(j, _mm256_set1_pd(2.0), _CMP_EQ_OQ),
                                         _mm256_cmp_pd(j, _mm256_set1_pd(6.0), _CMP_EQ_OQ));
    const __m256d flip = _mm256_and_pd(_mm256_cmp_pd(j, _mm256_set1_pd(4.0), _CMP_GE_OQ), sign_mask);
    const __m256d r = _mm256_blendv_pd(sin_poly, cos_poly, use_cos);
    return _mm256_xor_pd(r, _mm256_xor_pd(flip, sign));
}

// Same operation order as the scalar beamforming_gain.
inline __m256d gain_pd(__m256d dev, __m256d pi_d, __m256d n, __m256d n2)
{
    const __m256d pi = _mm256_set1_pd(std::numbers::pi);
    const __m256d x = _mm256_mul_pd(pi_d, dev);
    const __m256d k = _mm256_round_pd(_mm256_div_pd(x, pi), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(pi, k));
    const __m256d abs_r = _mm256_andnot_pd(_mm256_set1_pd(-0.0), r);
    const __m256d at_peak = _mm256_cmp_pd(abs_r, _mm256_set1_pd(1e-9), _CMP_LT_OQ);
    const __m256d ratio = _mm256_div_pd(sin_pd(_mm256_mul_pd(n, x)), sin_pd(x));
    return _mm256_blendv_pd(_mm256_mul_pd(ratio, ratio), n2, at_peak);
}

double gain_one(double dev, double n_active, double spacing_norm)
{
    const double x = std::numbers::pi * spacing_norm * dev;
    const double r = x - std::numbers::pi * std::nearbyint(x / std::numbers::pi);
    if (std::abs(r) < 1e-9)
        return n_active * n_active;
    const double ratio = std::sin(n_active * x) / std::sin(x);
    return ratio * ratio;
}

void array_gain(const double *dev, double *out, std::size_t count, double n_active, double spacing_norm)
{
    const __m256d pi_d = _mm256_set1_pd(std::numbers::pi * spacing_norm);
    const __m256d n = _mm256_set1_pd(n_active);
    const __m256d n2 = _mm256_set1_pd(n_active * n_active);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4)
        _mm256_storeu_pd(out + i, gain_pd(_mm256_loadu_pd(dev + i), pi_d, n, n2));
    for (; i < count; ++i)
        out[i] = gain_one(dev[i], n_active, spacing_norm);
}

void direction_cosines(const double *x, const double *y, const double *z, double *out, std::size_t count,
                       double ox, double oy, double oz)
{
    const __m256d vx = _mm256_set1_pd(ox), vy = _mm256_set1_pd(oy), vz = _mm256_set1_pd(oz);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4)
    {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vy);
        const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(z + i), vz);
        // No FMA here so the result is bit-identical to the scalar loop.
        const __m256d d2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                         _mm256_mul_pd(dz, dz));
        _mm256_storeu_pd(out + i, _mm256_div_pd(dx, _mm256_sqrt_pd(d2)));
    }
    for (; i < count; ++i)
    {
        const double dx = x[i] - ox, dy = y[i] - oy, dz = z[i] - oz;
        out[i] = dx / std::sqrt(dx * dx + dy * dy + dz * dz);
    }
}

void inverse_gain_sum(const double *coeff, const double *s, std::size_t m_count, const double *sbar, double *out,
                      std::size_t count, double n_active, double spacing_norm)
{
    const __m256d pi_d = _mm256_set1_pd(std::numbers::pi * spacing_norm);
    const __m256d n = _mm256_set1_pd(n_active);
    const __m256d n2 = _mm256_set1_pd(n_active * n_active);
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4)
    {
        const __m256d sb = _mm256_loadu_pd(sbar + j);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t m = 0; m < m_count; ++m)
        {
            const __m256d g = gain_pd(_mm256_sub_pd(_mm256_set1_pd(s[m]), sb), pi_d, n, n2);
            acc = _mm256_add_pd(acc, _mm256_div_pd(_mm256_set1_pd(coeff[m]), g));
        }
        _mm256_storeu_pd(out + j, acc);
    }
    for (; j < count; ++j)
    {
        double acc = 0.0;
        for (std::size_t m = 0; m < m_count; ++m)
            acc += coeff[m] / gain_one(s[m] - sbar[j], n_active, spacing_norm);
        out[j] = acc;
    }
}

constexpr KernelTable table{"avx2", array_gain, direction_cosines, inverse_gain_sum};

} // namespace

namespace detail
{
const KernelTable *avx2_table() { return &table; }
} // namespace detail

} // namespace aerialris
