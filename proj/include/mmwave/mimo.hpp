// SPDX-License-Identifier: Apache-2.0
//
// mmwave-lab: millimeter-wave MIMO link simulator with molecular absorption
// and re-radiation.
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

#include <armadillo>
#include <vector>

#include "mmwave/geometry.hpp"

namespace mmwave
{

// ConstantSnr: every entry is divided by the spread-only center-path gain
// g0 = c/(4*pi*f*D). Because |LoS|^2 + |re-rad|^2 equals the spread-only
// gain squared, this fixes total received power -- and with it the
// reception SNR -- independently of absorption.
// RawGain: entries are the physical transfer coefficients.
enum class Normalization
{
    ConstantSnr,
    RawGain,
};

struct ChannelMatrix
{
    arma::cx_mat entries; // n_r x n_t
    double frequency_hz;
    double k_per_m;
    Normalization normalization;

    arma::uword receive_count() const noexcept { return entries.n_rows; }
    arma::uword transmit_count() const noexcept { return entries.n_cols; }
};

// Power/noise assumptions for capacity evaluation. ConstantSnr pairs with
// normalized channels; ConstantPower pairs with raw physical gains.
class PowerBudget
{
  public:
    enum class Mode
    {
        ConstantSnr,
        ConstantPower,
    };

    static PowerBudget constant_snr(double snr_linear);
    static PowerBudget constant_snr_db(double snr_db);
    static PowerBudget constant_power(double total_power_w, double noise_power_w);

    Mode mode() const noexcept { return mode_; }
    double snr() const noexcept { return snr_; }                   // ConstantSnr only
    double total_power_w() const noexcept { return power_w_; }     // ConstantPower only
    double noise_power_w() const noexcept { return noise_w_; }     // ConstantPower only

    // P/(n_t * sigma^2) scale in the capacity formula for a given transmit
    // antenna count. Under ConstantSnr, P/sigma^2 is the configured SNR.
    double capacity_scale(arma::uword transmit_count) const;

    bool matches(Normalization normalization) const noexcept;

  private:
    PowerBudget() = default;
    Mode mode_ = Mode::ConstantSnr;
    double snr_ = 0.0;
    double power_w_ = 0.0;
    double noise_w_ = 0.0;
};

// Singular values count toward the numerical rank when above
// lambda_max * rank_tolerance.
inline constexpr double rank_tolerance = 1e-9;

struct CapacityResult
{
    double capacity_bps_hz;
    std::vector<double> singular_values; // descending
    int rank;
    double inverse_condition; // lambda_min / lambda_max in [0,1]; 0 if rank-deficient
};

// Assemble the channel matrix: entry (i, j) is the total transfer function
// for the exact pair distance d_ij and the caller-supplied random phase
// beta_ij, optionally normalized by the center-path gain. `betas` must be
// n_r x n_t with values in [0,1).
ChannelMatrix build_channel(const LinkGeometry &geometry, double frequency_hz, double k_per_m,
                            const arma::mat &betas, Normalization normalization);

// log2 det(I + P/(n_t*sigma^2) * H * H^H), evaluated through the complex LU
// determinant. Kept deliberately independent of the SVD route below so the
// two act as mutual oracles.
double capacity_det(const ChannelMatrix &channel, const PowerBudget &budget);

// Same capacity through the singular values of H, plus conditioning
// diagnostics. SVD failures surface as Numerical errors.
CapacityResult capacity_eig(const ChannelMatrix &channel, const PowerBudget &budget);

// Capacity of the 1x1 link built under the same mode at separation D.
double siso_reference(const PowerBudget &budget, double frequency_hz, double separation_m,
                      double k_per_m, double beta);

} // namespace mmwave
