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

#include <stdexcept>
#include <string>

namespace mmwave
{

// Failure classes. The CLI maps each class to a stable process exit code:
// input/configuration problems -> 2, sampled-range violations -> 3,
// numerical failures -> 4.
enum class ErrorKind
{
    Parse,        // malformed input text (CSV row, JSON field, flag value)
    Ordering,     // samples or grid values not strictly increasing
    Domain,       // value outside its mathematical domain (negative k, bad fraction)
    Range,        // query outside the sampled frequency range
    Lookup,       // referenced species/preset/file not found
    Consistency,  // spectra disagree on temperature/pressure, mode mismatch inputs
    Shape,        // matrix dimension mismatch
    Config,       // budget/normalization mode mismatch, invalid sweep spec
    Numerical,    // SVD or determinant failure
};

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Exit code class used by the command-line front end.
    int exit_code() const noexcept
    {
        switch (kind_)
        {
        case ErrorKind::Range:
            return 3;
        case ErrorKind::Numerical:
            return 4;
        default:
            return 2;
        }
    }

  private:
    ErrorKind kind_;
};

} // namespace mmwave
