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

#include "mmwave/mimo.hpp"

#include <cmath>
#include <string>

#include "mmwave/constants.hpp"
#include "mmwave/errors.hpp"
#include "mmwave/propagation.hpp"

namespace mmwave
{

PowerBudget PowerBudget::constant_snr(double snr_linear)
{
    if (!(snr_linear > 0.0))
        throw Error(ErrorKind::Domain, "SNR must be positive");
    PowerBudget b;
    b.mode_ = Mode::ConstantSnr;
    b.snr_ = snr_linear;
    return b;
}

PowerBudget PowerBudget::constant_snr_db(double snr_db)
{
    return constant_snr(std::pow(10.0, snr_db / 10.0));
}

PowerBudget PowerBudget::constant_power(double total_power_w, double noise_power_w)
{
    if (!(total_power_w > 0.0))
        throw Error(ErrorKind::Domain, "transmit power must be positive");
    if (!(noise_power_w > 0.0))
        throw Error(ErrorKind::Domain, "noise power must be positive");
    PowerBudget b;
    b.mode_ = Mode::ConstantPower;
    b.power_w_ = total_power_w;
    b.noise_w_ = noise_power_w;
    return b;
}

double PowerBudget::capacity_scale(arma::uword transmit_count) const
{
    const double per_antenna = 1.0 / static_cast<double>(transmit_count);
    if (mode_ == Mode::ConstantSnr)
        return snr_ * per_antenna;
    return power_w_ / noise_w_ * per_antenna;
}

bool PowerBudget::matches(Normalization normalization) const noexcept
{
    return (mode_ == Mode::ConstantSnr && normalization == Normalization::ConstantSnr) ||
           (mode_ == Mode::ConstantPower && normalization == Normalization::RawGain);
}

ChannelMatrix build_channel(const LinkGeometry &geometry, double frequency_hz, double k_per_m,
                            const arma::mat &betas, Normalization normalization)
{
    geometry.validate();
    const DistanceMatrix distances = distance_matrix(geometry, frequency_hz);
    const arma::uword n_r = distances.meters.n_rows;
    const arma::uword n_t = distances.meters.n_cols;
    if (betas.n_rows != n_r || betas.n_cols != n_t)
        throw Error(ErrorKind::Shape, "beta matrix is " + std::to_string(betas.n_rows) + "x" +
                                          std::to_string(betas.n_cols) + ", geometry needs " +
                                          std::to_string(n_r) + "x" + std::to_string(n_t));

    const double g0 = constants::speed_of_light /
                      (4.0 * constants::pi * frequency_hz * geometry.separation_m);
    const double scale = normalization == Normalization::ConstantSnr ? 1.0 / g0 : 1.0;

    arma::cx_mat h(n_r, n_t);
    for (arma::uword i = 0; i < n_r; ++i)
        for (arma::uword j = 0; j < n_t; ++j)
        {
            const PathConditions path{frequency_hz, distances.meters(i, j), k_per_m};
            h(i, j) = scale * total_gain(path, betas(i, j));
        }
    return {std::move(h), frequency_hz, k_per_m, normalization};
}

namespace
{

void check_budget(const ChannelMatrix &channel, const PowerBudget &budget)
{
    if (!budget.matches(channel.normalization))
        throw Error(ErrorKind::Config,
                    "power budget mode does not match the channel normalization "
                    "(ConstantSnr pairs with ConstantSnr, ConstantPower with RawGain)");
}

} // namespace

double capacity_det(const ChannelMatrix &channel, const PowerBudget &budget)
{
    check_budget(channel, budget);
    const double scale = budget.capacity_scale(channel.transmit_count());
    const arma::uword n_r = channel.receive_count();
    arma::cx_mat a = arma::eye<arma::cx_mat>(n_r, n_r) +
                     scale * (channel.entries * channel.entries.t());
    const std::complex<double> ld = arma::log_det(a);
    // A is Hermitian positive definite, so the determinant is real positive.
    return ld.real() / std::log(2.0);
}

CapacityResult capacity_eig(const ChannelMatrix &channel, const PowerBudget &budget)
{
    check_budget(channel, budget);
    arma::vec sv;
    if (!arma::svd(sv, channel.entries))
        throw Error(ErrorKind::Numerical, "SVD failed to converge on a " +
                                              std::to_string(channel.receive_count()) + "x" +
                                              std::to_string(channel.transmit_count()) +
                                              " channel matrix");

    const double scale = budget.capacity_scale(channel.transmit_count());
    CapacityResult result;
    result.singular_values.assign(sv.begin(), sv.end()); // arma returns descending order

    const double lambda_max = result.singular_values.front();
    const double threshold = lambda_max * rank_tolerance;
    double capacity = 0.0;
    int rank = 0;
    for (const double lambda : result.singular_values)
    {
        capacity += std::log2(1.0 + scale * lambda * lambda);
        if (lambda > threshold)
            ++rank;
    }
    const double lambda_min = result.singular_values.back();

    result.capacity_bps_hz = capacity;
    result.rank = lambda_max > 0.0 ? rank : 0;
    result.inverse_condition =
        (lambda_max > 0.0 && lambda_min > threshold) ? lambda_min / lambda_max : 0.0;
    return result;
}

double siso_reference(const PowerBudget &budget, double frequency_hz, double separation_m,
                      double k_per_m, double beta)
{
    LinkGeometry link;
    link.transmitter.element_count = 1;
    link.receiver.element_count = 1;
    link.separation_m = separation_m;

    const Normalization normalization = budget.mode() == PowerBudget::Mode::ConstantSnr
                                            ? Normalization::ConstantSnr
                                            : Normalization::RawGain;
    arma::mat betas(1, 1);
    betas(0, 0) = beta;
    const ChannelMatrix channel = build_channel(link, frequency_hz, k_per_m, betas, normalization);
    return capacity_eig(channel, budget).capacity_bps_hz;
}

} // namespace mmwave
