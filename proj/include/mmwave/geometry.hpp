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

namespace mmwave
{

struct Vec2
{
    double x;
    double y;
};

// Uniform linear array: element count, inter-element spacing in wavelengths
// (0.5 by default), and orientation angle in radians measured from the
// transmitter->receiver axis (pi/2 = broadside).
struct UlaConfig
{
    int element_count = 1;
    double spacing_wavelengths = 0.5;
    double orientation_rad = 1.5707963267948966;

    void validate() const; // Domain error on bad counts/spacing
};

// Two ULAs facing each other across a separation D, in a common plane.
// The transmitter array is centered at the origin, the receiver array at
// (D, 0). Each orientation angle is measured at its own end against the
// line of sight toward the peer (90 degrees = broadside on both sides), so
// swapping the two angles transposes the distance matrix. No far-field
// assumption is made anywhere: amplitudes and phases both use exact
// per-pair Euclidean distances.
struct LinkGeometry
{
    UlaConfig transmitter;
    UlaConfig receiver;
    double separation_m = 50.0;

    void validate() const;
};

// n_r x n_t matrix of exact element-pair distances in meters.
struct DistanceMatrix
{
    arma::mat meters; // entry (i, j): receiver element i to transmitter element j
};

// Element coordinates for one array. Elements are collinear along
// (cos orientation, sin orientation), centered on `center`, with element j
// offset by (j - (n-1)/2) * spacing from the center.
std::vector<Vec2> element_positions(const UlaConfig &config, Vec2 center, double wavelength_m);

// Pairwise distances for the link at a given carrier. The wavelength (and
// with it the physical spacing of a wavelength-specified array) is
// recomputed from `frequency_hz` on every call, so sweeps track frequency.
DistanceMatrix distance_matrix(const LinkGeometry &geometry, double frequency_hz);

} // namespace mmwave
