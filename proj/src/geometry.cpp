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

#include "mmwave/geometry.hpp"

#include <cmath>
#include <string>

#include "mmwave/constants.hpp"
#include "mmwave/errors.hpp"

namespace mmwave
{

void UlaConfig::validate() const
{
    if (element_count < 1)
        throw Error(ErrorKind::Domain,
                    "array needs at least one element, got " + std::to_string(element_count));
    if (!(spacing_wavelengths > 0.0))
        throw Error(ErrorKind::Domain, "inter-element spacing must be positive");
    if (!std::isfinite(orientation_rad))
        throw Error(ErrorKind::Domain, "array orientation must be finite");
}

void LinkGeometry::validate() const
{
    transmitter.validate();
    receiver.validate();
    if (!(separation_m > 0.0))
        throw Error(ErrorKind::Domain, "link separation must be positive");
}

std::vector<Vec2> element_positions(const UlaConfig &config, Vec2 center, double wavelength_m)
{
    config.validate();
    if (!(wavelength_m > 0.0))
        throw Error(ErrorKind::Domain, "wavelength must be positive");

    const double spacing = config.spacing_wavelengths * wavelength_m;
    const double dir_x = std::cos(config.orientation_rad);
    const double dir_y = std::sin(config.orientation_rad);
    const int n = config.element_count;

    std::vector<Vec2> positions;
    positions.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
    {
        const double offset = (j - (n - 1) / 2.0) * spacing;
        positions.push_back({center.x + offset * dir_x, center.y + offset * dir_y});
    }
    return positions;
}

DistanceMatrix distance_matrix(const LinkGeometry &geometry, double frequency_hz)
{
    geometry.validate();
    if (!(frequency_hz > 0.0))
        throw Error(ErrorKind::Domain, "carrier frequency must be positive");

    // Each orientation is measured at its own end against the line of sight
    // toward the peer, so the receiver direction is mirrored. This makes the
    // configuration symmetric: swapping the two angles transposes the matrix.
    const double wavelength = constants::speed_of_light / frequency_hz;
    const auto tx = element_positions(geometry.transmitter, {0.0, 0.0}, wavelength);
    UlaConfig mirrored = geometry.receiver;
    mirrored.orientation_rad = constants::pi - geometry.receiver.orientation_rad;
    const auto rx = element_positions(mirrored, {geometry.separation_m, 0.0}, wavelength);

    arma::mat d(rx.size(), tx.size());
    for (std::size_t i = 0; i < rx.size(); ++i)
        for (std::size_t j = 0; j < tx.size(); ++j)
            d(i, j) = std::hypot(rx[i].x - tx[j].x, rx[i].y - tx[j].y);
    return {std::move(d)};
}

} // namespace mmwave
