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

#include "mmwave/propagation.hpp"

#include <cmath>

#include "mmwave/constants.hpp"
#include "mmwave/errors.hpp"

namespace mmwave
{

namespace
{

using namespace constants;

// Spread-only amplitude gain c/(4*pi*f*d).
double spread_gain(double frequency_hz, double distance_m)
{
    return speed_of_light / (4.0 * pi * frequency_hz * distance_m);
}

void check_beta(double beta)
{
    if (!(beta >= 0.0 && beta < 1.0))
        throw Error(ErrorKind::Domain, "random phase fraction must lie in [0,1)");
}

} // namespace

void PathConditions::validate() const
{
    if (!(frequency_hz > 0.0))
        throw Error(ErrorKind::Domain, "frequency must be positive");
    if (!(distance_m > 0.0))
        throw Error(ErrorKind::Domain, "distance must be positive");
    if (!(k_per_m >= 0.0))
        throw Error(ErrorKind::Domain, "absorption coefficient must be non-negative");
}

double spreading_attenuation(double frequency_hz, double distance_m)
{
    if (!(frequency_hz > 0.0) || !(distance_m > 0.0))
        throw Error(ErrorKind::Domain, "spreading attenuation needs positive f and d");
    const double x = 4.0 * constants::pi * frequency_hz * distance_m / constants::speed_of_light;
    return x * x;
}

double absorption_attenuation(const PathConditions &conditions)
{
    conditions.validate();
    return std::exp(conditions.k_per_m * conditions.distance_m);
}

double los_received_power(double transmit_power_w, const PathConditions &conditions)
{
    conditions.validate();
    if (!(transmit_power_w >= 0.0))
        throw Error(ErrorKind::Domain, "transmit power must be non-negative");
    const double g = spread_gain(conditions.frequency_hz, conditions.distance_m);
    return transmit_power_w * g * g * std::exp(-conditions.k_per_m * conditions.distance_m);
}

double reradiated_power(double transmit_power_w, const PathConditions &conditions)
{
    conditions.validate();
    if (!(transmit_power_w >= 0.0))
        throw Error(ErrorKind::Domain, "transmit power must be non-negative");
    const double g = spread_gain(conditions.frequency_hz, conditions.distance_m);
    return transmit_power_w * (1.0 - std::exp(-conditions.k_per_m * conditions.distance_m)) * g * g;
}

double sky_noise_psd(double frequency_hz, double k_per_m)
{
    if (!(frequency_hz > 0.0))
        throw Error(ErrorKind::Domain, "frequency must be positive");
    if (!(k_per_m >= 0.0))
        throw Error(ErrorKind::Domain, "absorption coefficient must be non-negative");
    if (k_per_m == 0.0)
        return 0.0;
    const double x = constants::speed_of_light / (std::sqrt(4.0 * constants::pi) * frequency_hz);
    return constants::boltzmann * constants::reference_temperature_k * x * x;
}

NoisePsd molecular_noise_psd(double transmit_psd_w_hz, const PathConditions &conditions)
{
    const double sky = sky_noise_psd(conditions.frequency_hz, conditions.k_per_m);
    const double self = reradiated_power(transmit_psd_w_hz, conditions);
    return {sky, self, sky + self};
}

ComplexGain los_gain(const PathConditions &conditions)
{
    conditions.validate();
    const double g = spread_gain(conditions.frequency_hz, conditions.distance_m);
    const double magnitude = g * std::exp(-conditions.k_per_m * conditions.distance_m / 2.0);
    const double wavelength = constants::speed_of_light / conditions.frequency_hz;
    const double phase = 2.0 * constants::pi * conditions.distance_m / wavelength;
    return std::polar(magnitude, phase);
}

ComplexGain reradiated_gain(const PathConditions &conditions, double beta)
{
    conditions.validate();
    check_beta(beta);
    const double g = spread_gain(conditions.frequency_hz, conditions.distance_m);
    const double magnitude =
        g * std::sqrt(1.0 - std::exp(-conditions.k_per_m * conditions.distance_m));
    return std::polar(magnitude, 2.0 * constants::pi * beta);
}

ComplexGain total_gain(const PathConditions &conditions, double beta)
{
    return los_gain(conditions) + reradiated_gain(conditions, beta);
}

} // namespace mmwave
