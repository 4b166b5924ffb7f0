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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aerialris/geometry.hpp"

namespace aerialris
{

using cdouble = std::complex<double>;

inline constexpr double speed_of_light = 299792458.0;

// Thermal noise density, -174 dBm/Hz, in W/Hz.
inline constexpr double noise_psd_dbm_per_hz = -174.0;
double noise_psd_w_per_hz();

double db_to_linear(double db);
double linear_to_db(double lin);
double dbm_to_watts(double dbm);
double watts_to_dbm(double w);

// Passive aerial RIS: an N-element ULA along the x-axis at altitude H.
struct RisConfig
{
    std::size_t n_elements = 300;
    double element_spacing_norm = 0.1; // d_RIS / lambda
    double altitude = 150.0;           // m
    double frequency_ghz = 3.5;

    void validate() const;
    double wavelength() const; // m
};

// Directional element pattern: G_max minus capped vertical + horizontal attenuation.
struct AntennaPattern
{
    double g_max_db = 8.0;
    double sla_v_db = 30.0;
    double a_max_db = 30.0;
    double theta_hpbw_deg = 65.0;
    double phi_hpbw_deg = 65.0;
};

struct SourceConfig
{
    std::size_t n_antennas = 16;
    double antenna_spacing_norm = 0.5; // d_s / lambda
    AntennaPattern pattern;
    double max_power_w = 1000.0; // 30 dBW

    void validate() const;
};

// Dense row-major complex matrix; only what the channel model needs.
class ComplexMatrix
{
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols, cdouble fill = {})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cdouble &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cdouble &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const cdouble> data() const { return data_; }

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix adjoint() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cdouble> data_;
};

// beta_0 in dB for a 1 m reference distance at f GHz.
double reference_path_loss_db(double frequency_ghz);

// Free-space power gains (linear); beta0 is linear.
double path_loss_source_ris(const Vec3 &ris_pos, double beta0);
double path_loss_ris_uav(const Vec3 &ris_pos, const Vec3 &uav, double beta0);

// n x 1 ULA steering vector, k-th entry exp(-j 2 pi k d sin).
ComplexMatrix array_response(std::size_t n, double spacing_norm, double sin_angle);

// LoS channels of one RIS placement.  H is N x M; each entry of h_rows is the
// 1 x N row h^*(q, rho_m).
struct LosChannels
{
    ComplexMatrix source_to_ris;
    std::vector<ComplexMatrix> ris_to_uav;
};

LosChannels build_channels(const Vec3 &ris_pos, std::span<const Vec3> uavs, const RisConfig &ris,
                           const SourceConfig &source, std::uint64_t seed);

// |sin(pi N d dev) / sin(pi d dev)|^2 with the N^2 limit at the lattice of
// deviations where the denominator vanishes.
double beamforming_gain(std::size_t n_active, double spacing_norm, double deviation);

// 0.8858 / (N d): full width in sin-space where the gain stays above N^2 / 2.
double hpbw(std::size_t n_active, double spacing_norm);

// sigma^2 = bandwidth * N_psd.
double noise_power(double bandwidth_hz);

// Scalar link-budget terms shared by the SNR, bound and power computations.
struct LinkBudget
{
    double beta0 = 0.0;        // linear reference gain at 1 m
    double source_gain = 1.0;  // G_s, linear
    double noise_power = 0.0;  // sigma^2 per UAV band, W
    std::size_t n_antennas = 1;
    double backhaul_bandwidth = 0.0; // B_b, Hz
    std::size_t n_uavs = 1;          // M_0, number of FDMA bands

    double band_bandwidth() const { return backhaul_bandwidth / double(n_uavs); }
};

LinkBudget make_link_budget(const RisConfig &ris, const SourceConfig &source, double source_gain_linear,
                            double backhaul_bandwidth_hz, std::size_t n_uavs);

// Closed-form received SNR, gamma_bar * g / (|rho_RIS - rho_m|^2 |rho_RIS|^2).
double received_snr_closed(double power_w, const LinkBudget &budget, const Vec3 &ris_pos, const Vec3 &uav,
                           double gain);

// Per-band Shannon rate (B_b / M_0) log2(1 + snr).
double backhaul_rate(double snr, const LinkBudget &budget);

// 2^(M_0 C / B_b) - 1: the SNR needed to carry `rate` in one band.
double required_snr(double rate_bps, const LinkBudget &budget);

} // namespace aerialris
