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

#include <cmath>
#include <numbers>
#include <string>

#include "aerialris/error.hpp"
#include "aerialris/random.hpp"

namespace aerialris
{

using std::numbers::pi;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

double noise_psd_w_per_hz() { return dbm_to_watts(noise_psd_dbm_per_hz); }

void RisConfig::validate() const
{
    if (n_elements < 1)
        throw DomainError("RisConfig: n_elements must be >= 1");
    // [1/10, 1/5] wavelengths, with a little slack for decimal config input.
    if (!(element_spacing_norm >= 0.1 - 1e-12 && element_spacing_norm <= 0.2 + 1e-12))
        throw DomainError("RisConfig: element_spacing_norm must lie in [0.1, 0.2] wavelengths");
    if (!(altitude > 0.0))
        throw DomainError("RisConfig: altitude must be positive");
    if (!(frequency_ghz > 0.0))
        throw DomainError("RisConfig: frequency must be positive");
}

double RisConfig::wavelength() const { return speed_of_light / (frequency_ghz * 1e9); }

void SourceConfig::validate() const
{
    if (n_antennas < 1)
        throw DomainError("SourceConfig: n_antennas must be >= 1");
    if (!(max_power_w > 0.0))
        throw DomainError("SourceConfig: max_power must be positive");
    const auto &p = pattern;
    if (!(p.sla_v_db > 0 && p.a_max_db > 0 && p.theta_hpbw_deg > 0 && p.phi_hpbw_deg > 0))
        throw DomainError("SourceConfig: antenna pattern attenuations and beamwidths must be positive");
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const
{
    if (cols_ != rhs.rows_)
        throw DomainError("ComplexMatrix: dimension mismatch in product");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
        {
            const cdouble a = (*this)(r, k);
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out(r, c) += a * rhs(k, c);
        }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

double reference_path_loss_db(double frequency_ghz)
{
    if (!(frequency_ghz > 0.0))
        throw DomainError("reference_path_loss: frequency must be positive");
    return -20.0 * std::log10(frequency_ghz) - 32.45;
}

double path_loss_source_ris(const Vec3 &ris_pos, double beta0)
{
    const double d2 = ris_pos.squared_norm();
    if (!(d2 > 0.0))
        throw DomainError("path_loss_source_ris: RIS at the source position");
    return beta0 / d2;
}

double path_loss_ris_uav(const Vec3 &ris_pos, const Vec3 &uav, double beta0)
{
    const double d2 = (ris_pos - uav).squared_norm();
    if (!(d2 > 0.0))
        throw DomainError("path_loss_ris_uav: UAV at the RIS position");
    return beta0 / d2;
}

ComplexMatrix array_response(std::size_t n, double spacing_norm, double sin_angle)
{
    if (n < 1)
        throw DomainError("array_response: n must be >= 1");
    ComplexMatrix a(n, 1);
    for (std::size_t k = 0; k < n; ++k)
        a(k, 0) = std::polar(1.0, -2.0 * pi * double(k) * spacing_norm * sin_angle);
    return a;
}

LosChannels build_channels(const Vec3 &ris_pos, std::span<const Vec3> uavs, const RisConfig &ris,
                           const SourceConfig &source, std::uint64_t seed)
{
    ris.validate();
    source.validate();
    const double beta0 = db_to_linear(reference_path_loss_db(ris.frequency_ghz));
    const double lambda = ris.wavelength();
    Rng rng(seed);

    LosChannels ch;
    {
        const double gain = std::sqrt(path_loss_source_ris(ris_pos, beta0));
        const double phi_h = 2.0 * pi * rng.uniform();
        const cdouble scale = gain * std::polar(1.0, phi_h - 2.0 * pi * ris_pos.norm() / lambda);
        const auto a_ris = array_response(ris.n_elements, ris.element_spacing_norm, sin_aoa_source(ris_pos));
        const auto a_src = array_response(source.n_antennas, source.antenna_spacing_norm, sin_aod_source(ris_pos));
        ch.source_to_ris = ComplexMatrix(ris.n_elements, source.n_antennas);
        for (std::size_t n = 0; n < ris.n_elements; ++n)
            for (std::size_t m = 0; m < source.n_antennas; ++m)
                ch.source_to_ris(n, m) = scale * a_ris(n, 0) * std::conj(a_src(m, 0));
    }

    ch.ris_to_uav.reserve(uavs.size());
    for (const Vec3 &uav : uavs)
    {
        const double gain = std::sqrt(path_loss_ris_uav(ris_pos, uav, beta0));
        const double phi_h = 2.0 * pi * rng.uniform();
        const cdouble scale = gain * std::polar(1.0, phi_h - 2.0 * pi * distance(ris_pos, uav) / lambda);
        const auto a = array_response(ris.n_elements, ris.element_spacing_norm, sin_aod_ris(ris_pos, uav));
        ComplexMatrix row(1, ris.n_elements);
        for (std::size_t n = 0; n < ris.n_elements; ++n)
            row(0, n) = scale * std::conj(a(n, 0));
        ch.ris_to_uav.push_back(std::move(row));
    }
    return ch;
}

double beamforming_gain(std::size_t n_active, double spacing_norm, double deviation)
{
    const double n = double(n_active);
    const double x = pi * spacing_norm * deviation;
    // Distance to the nearest multiple of pi, where sin(x) vanishes.
    const double r = x - pi * std::nearbyint(x / pi);
    if (std::abs(r) < 1e-9)
        return n * n;
    const double ratio = std::sin(n * x) / std::sin(x);
    return ratio * ratio;
}

double hpbw(std::size_t n_active, double spacing_norm) { return 0.8858 / (double(n_active) * spacing_norm); }

double noise_power(double bandwidth_hz) { return bandwidth_hz * noise_psd_w_per_hz(); }

LinkBudget make_link_budget(const RisConfig &ris, const SourceConfig &source, double source_gain_linear,
                            double backhaul_bandwidth_hz, std::size_t n_uavs)
{
    if (n_uavs < 1)
        throw DomainError("make_link_budget: at least one UAV-BS required");
    if (!(backhaul_bandwidth_hz > 0.0))
        throw DomainError("make_link_budget: backhaul bandwidth must be positive");
    LinkBudget b;
    b.beta0 = db_to_linear(reference_path_loss_db(ris.frequency_ghz));
    b.source_gain = source_gain_linear;
    b.n_antennas = source.n_antennas;
    b.backhaul_bandwidth = backhaul_bandwidth_hz;
    b.n_uavs = n_uavs;
    b.noise_power = noise_power(backhaul_bandwidth_hz / double(n_uavs));
    return b;
}

double received_snr_closed(double power_w, const LinkBudget &budget, const Vec3 &ris_pos, const Vec3 &uav,
                           double gain)
{
    const double d_src = ris_pos.squared_norm();
    const double d_uav = (ris_pos - uav).squared_norm();
    if (!(d_src > 0.0) || !(d_uav > 0.0))
        throw DomainError("received_snr_closed: zero link distance");
    const double gamma_bar =
        power_w * budget.source_gain * budget.beta0 * budget.beta0 * double(budget.n_antennas) / budget.noise_power;
    return gamma_bar * gain / (d_uav * d_src);
}

double backhaul_rate(double snr, const LinkBudget &budget) { return budget.band_bandwidth() * std::log2(1.0 + snr); }

double required_snr(double rate_bps, const LinkBudget &budget)
{
    return std::exp2(rate_bps / budget.band_bandwidth()) - 1.0;
}

} // namespace aerialris
