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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mmwave/constants.hpp"
#include "mmwave/errors.hpp"
#include "mmwave/geometry.hpp"

using namespace mmwave;
using constants::pi;

namespace
{

LinkGeometry parallel_link(int n, double separation = 50.0)
{
    LinkGeometry link;
    link.transmitter = {n, 0.5, pi / 2};
    link.receiver = {n, 0.5, pi / 2};
    link.separation_m = separation;
    return link;
}

} // namespace

TEST_CASE("element_positions: single element sits at the center")
{
    const UlaConfig config{1, 0.5, 1.2345};
    const auto pos = element_positions(config, {3.0, -2.0}, 0.005);
    REQUIRE(pos.size() == 1);
    CHECK(pos[0].x == 3.0);
    CHECK(pos[0].y == -2.0);
}

TEST_CASE("element_positions: three broadside elements at half-wavelength spacing")
{
    // lambda = 5 mm -> offsets -2.5, 0, +2.5 mm along y
    const UlaConfig config{3, 0.5, pi / 2};
    const auto pos = element_positions(config, {0.0, 0.0}, 0.005);
    REQUIRE(pos.size() == 3);
    CHECK(pos[0].y == doctest::Approx(-0.0025).epsilon(1e-12));
    CHECK(pos[1].y == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(pos[2].y == doctest::Approx(0.0025).epsilon(1e-12));
    for (const auto &p : pos)
        CHECK(std::abs(p.x) < 1e-15);
}

TEST_CASE("element_positions: zero orientation lies on the x-axis")
{
    const UlaConfig config{2, 0.5, 0.0};
    const auto pos = element_positions(config, {0.0, 0.0}, 0.004);
    CHECK(pos[0].y == 0.0);
    CHECK(pos[1].y == 0.0);
    CHECK(pos[1].x - pos[0].x == doctest::Approx(0.002).epsilon(1e-12));
}

TEST_CASE("element_positions: input validation")
{
    CHECK_THROWS_AS(element_positions({0, 0.5, 0.0}, {0, 0}, 0.005), Error);
    CHECK_THROWS_AS(element_positions({2, -0.5, 0.0}, {0, 0}, 0.005), Error);
    CHECK_THROWS_AS(element_positions({2, 0.5, 0.0}, {0, 0}, 0.0), Error);
}

TEST_CASE("distance_matrix: point-to-point link")
{
    const auto d = distance_matrix(parallel_link(1), 60e9);
    REQUIRE(d.meters.n_rows == 1);
    REQUIRE(d.meters.n_cols == 1);
    CHECK(d.meters(0, 0) == 50.0);
}

TEST_CASE("distance_matrix: broadside 3x3 layout at 60 GHz")
{
    const double f = 60e9;
    const double lambda = constants::speed_of_light / f;
    const auto d = distance_matrix(parallel_link(3), f);

    // aligned opposite elements see exactly the separation
    CHECK(d.meters(0, 0) == 50.0);
    CHECK(d.meters(1, 1) == 50.0);
    CHECK(d.meters(2, 2) == 50.0);

    // corner pair: Pythagoras over two spacings (= one wavelength)
    const double expected = std::sqrt(50.0 * 50.0 + lambda * lambda);
    CHECK(d.meters(0, 2) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(d.meters(2, 0) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("distance_matrix: swapping the array angles transposes the matrix")
{
    LinkGeometry link;
    link.transmitter = {3, 0.5, 0.3};
    link.receiver = {3, 0.5, 1.1};
    link.separation_m = 42.0;
    const auto d = distance_matrix(link, 80e9);

    std::swap(link.transmitter.orientation_rad, link.receiver.orientation_rad);
    const auto dt = distance_matrix(link, 80e9);
    for (arma::uword i = 0; i < 3; ++i)
        for (arma::uword j = 0; j < 3; ++j)
            CHECK(d.meters(i, j) == doctest::Approx(dt.meters(j, i)).epsilon(1e-14));
}

TEST_CASE("distance_matrix: broadside symmetric arrays give a Toeplitz matrix")
{
    const auto d = distance_matrix(parallel_link(4), 60e9);
    for (arma::uword i = 0; i < 4; ++i)
        for (arma::uword j = 0; j < 4; ++j)
        {
            CHECK(d.meters(i, j) == doctest::Approx(d.meters(j, i)).epsilon(1e-15));
            if (i + 1 < 4 && j + 1 < 4)
                CHECK(d.meters(i, j) == doctest::Approx(d.meters(i + 1, j + 1)).epsilon(1e-15));
        }
}

TEST_CASE("distance_matrix: distances bounded by separation plus apertures")
{
    for (const double orientation : {0.0, 0.4, pi / 2, 2.1})
    {
        LinkGeometry link;
        link.transmitter = {5, 0.5, orientation};
        link.receiver = {7, 0.5, pi - orientation};
        link.separation_m = 50.0;
        const double f = 75e9;
        const double lambda = constants::speed_of_light / f;
        const double aperture_tx = 4 * 0.5 * lambda;
        const double aperture_rx = 6 * 0.5 * lambda;
        const auto d = distance_matrix(link, f);
        for (const double v : d.meters)
        {
            CHECK(v > 0.0);
            CHECK(v >= 50.0 - (aperture_tx + aperture_rx) / 2.0 - 1e-9);
            CHECK(v <= 50.0 + (aperture_tx + aperture_rx) / 2.0 + 1e-9);
        }
    }
}

TEST_CASE("distance_matrix: doubling frequency halves the aperture")
{
    const auto d60 = distance_matrix(parallel_link(3), 60e9);
    const auto d120 = distance_matrix(parallel_link(3), 120e9);
    const double excess60 = d60.meters(0, 2) - 50.0;
    const double excess120 = d120.meters(0, 2) - 50.0;
    // corner excess ~ aperture^2 / (2D), so halving the aperture quarters it
    CHECK(excess120 < excess60);
    CHECK(excess120 == doctest::Approx(excess60 / 4.0).epsilon(1e-6));
}

TEST_CASE("geometry validation")
{
    LinkGeometry link = parallel_link(2);
    link.separation_m = 0.0;
    CHECK_THROWS_AS(link.validate(), Error);
    CHECK_THROWS_AS(distance_matrix(parallel_link(2), 0.0), Error);
}
