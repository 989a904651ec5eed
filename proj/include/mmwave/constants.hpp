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

namespace mmwave::constants
{

inline constexpr double speed_of_light = 299792458.0;        // m/s
inline constexpr double boltzmann = 1.380649e-23;            // J/K
inline constexpr double reference_temperature_k = 296.0;     // K, sky-noise reference
inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace mmwave::constants
