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

#include <cstdint>

namespace mmwave
{

// Counter-based uniform streams: the value for a (seed, trial, pair) triple
// is a pure function of the triple, so trials can be evaluated in any order
// on any number of threads and still reproduce bit-identical results.

namespace detail
{
inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
} // namespace detail

// Disjoint pair-index planes keep the per-entry phase draws, per-trial
// angle draws, and the SISO reference stream independent of one another.
namespace stream
{
inline constexpr std::uint64_t beta_base = 0;                       // + i*n_t + j
inline constexpr std::uint64_t angle_tx = 0x4000000000000000ull;
inline constexpr std::uint64_t angle_rx = 0x4000000000000001ull;
inline constexpr std::uint64_t siso_beta = 0x8000000000000000ull;
} // namespace stream

// Deterministic uniform draw in [0, 1) for the given triple.
inline double derive_trial_stream(std::uint64_t seed, std::uint64_t trial_index,
                                  std::uint64_t pair_index) noexcept
{
    using detail::splitmix64;
    const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ trial_index) ^ pair_index);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

} // namespace mmwave
