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

#include <complex>

namespace mmwave
{

// Single-path evaluation point: carrier frequency, path length, and the
// medium absorption coefficient at that frequency.
struct PathConditions
{
    double frequency_hz;
    double distance_m;
    double k_per_m; // medium absorption coefficient, >= 0

    void validate() const;
};

// Molecular noise power spectral densities in W/Hz. `total` is always
// sky + self_induced.
struct NoisePsd
{
    double sky;
    double self_induced;
    double total;
};

using ComplexGain = std::complex<double>;

// Spreading attenuation (4*pi*f*d/c)^2, dimensionless.
double spreading_attenuation(double frequency_hz, double distance_m);

// Molecular absorption attenuation e^(k*d), always >= 1.
double absorption_attenuation(const PathConditions &conditions);

// Line-of-sight received power: Pt * (c/(4*pi*f*d))^2 * e^(-k*d).
double los_received_power(double transmit_power_w, const PathConditions &conditions);

// Power re-radiated by excited molecules and collected at the receiver:
// Pt * (1 - e^(-k*d)) * (c/(4*pi*f*d))^2.
double reradiated_power(double transmit_power_w, const PathConditions &conditions);

// Distance limit of the atmospheric (sky) emission PSD:
// kB * T0 * (c/(sqrt(4*pi)*f))^2 for any k > 0, and exactly 0 for k = 0.
// Note the discontinuity at k = 0: the limit over distance erases any
// dependence on how small a positive k is, while a perfectly transparent
// medium emits nothing. Implemented as stated.
double sky_noise_psd(double frequency_hz, double k_per_m);

// Sky + self-induced molecular noise PSD for a transmitted PSD Pt. The
// self-induced term coincides with reradiated_power evaluated on a
// per-hertz basis.
NoisePsd molecular_noise_psd(double transmit_psd_w_hz, const PathConditions &conditions);

// Line-of-sight transfer function: magnitude (c/(4*pi*f*d)) * e^(-k*d/2),
// deterministic phase 2*pi*d/lambda with lambda = c/f.
ComplexGain los_gain(const PathConditions &conditions);

// Re-radiated transfer function: magnitude (c/(4*pi*f*d)) * sqrt(1-e^(-k*d)),
// phase 2*pi*beta with beta uniform in [0,1) supplied by the caller (all
// randomness is externalized).
ComplexGain reradiated_gain(const PathConditions &conditions, double beta);

// Total transfer function: los_gain + reradiated_gain. The two components
// partition the spread-only power budget: |LoS|^2 + |re-rad|^2 =
// (c/(4*pi*f*d))^2 for every k.
ComplexGain total_gain(const PathConditions &conditions, double beta);

} // namespace mmwave
