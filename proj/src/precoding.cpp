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

#include "aerialris/precoding.hpp"

#include <cmath>
#include <numbers>

#include "aerialris/error.hpp"

namespace aerialris
{

using std::numbers::pi;

ComplexMatrix mrt_vector(const Vec3 &ris_pos, const SourceConfig &source)
{
    ComplexMatrix v = array_response(source.n_antennas, source.antenna_spacing_norm, sin_aod_source(ris_pos));
    const double scale = 1.0 / std::sqrt(double(source.n_antennas));
    for (std::size_t m = 0; m < v.rows(); ++m)
        v(m, 0) *= scale;
    return v;
}

void apply_phase_profile(PhaseProfile &profile, const Vec3 &ris_pos, const Vec3 &align, const RisConfig &ris,
                         ElementRange range)
{
    if (range.end() > profile.phases.size())
        throw DomainError("phase_profile: element window exceeds array size");
    const double delta = sin_aod_ris(ris_pos, align) - sin_aoa_source(ris_pos);
    for (std::size_t n = range.first; n < range.end(); ++n)
    {
        double theta = profile.reference_phase - 2.0 * pi * double(n) * ris.element_spacing_norm * delta;
        theta = std::fmod(theta, 2.0 * pi);
        if (theta < 0.0)
            theta += 2.0 * pi;
        if (theta >= 2.0 * pi)
            theta = 0.0;
        profile.phases[n] = theta;
    }
}

PhaseProfile phase_profile(const Vec3 &ris_pos, const Vec3 &align, const RisConfig &ris, double reference_phase)
{
    PhaseProfile p;
    p.reference_phase = reference_phase;
    p.phases.assign(ris.n_elements, 0.0);
    apply_phase_profile(p, ris_pos, align, ris, {0, ris.n_elements});
    return p;
}

ComplexMatrix phase_matrix(const PhaseProfile &profile)
{
    const std::size_t n = profile.phases.size();
    ComplexMatrix theta(n, n);
    for (std::size_t i = 0; i < n; ++i)
        theta(i, i) = std::polar(1.0, profile.phases[i]);
    return theta;
}

double matrix_snr(double power_w, const LinkBudget &budget, const LosChannels &ch, std::size_t uav_index,
                  const PhaseProfile &profile, const ComplexMatrix &precoder, ElementRange window)
{
    const ComplexMatrix &h = ch.ris_to_uav.at(uav_index);
    const ComplexMatrix &H = ch.source_to_ris;
    if (H.cols() != precoder.rows() || h.cols() != H.rows() || profile.phases.size() != H.rows())
        throw DomainError("matrix_snr: dimension mismatch");
    if (window.count == 0)
        window = {0, H.rows()};
    if (window.end() > H.rows())
        throw DomainError("matrix_snr: element window exceeds array size");

    // Theta is diagonal, so h Theta H v collapses to a weighted inner product.
    const ComplexMatrix Hv = H * precoder;
    cdouble acc{};
    for (std::size_t n = window.first; n < window.end(); ++n)
        acc += h(0, n) * std::polar(1.0, profile.phases[n]) * Hv(n, 0);
    return power_w * budget.source_gain * std::norm(acc) / budget.noise_power;
}

} // namespace aerialris
