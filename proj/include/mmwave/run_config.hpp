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

#include <iosfwd>
#include <string>
#include <vector>

#include "mmwave/experiments.hpp"

namespace mmwave
{

enum class OutputFormat
{
    Csv,
    JsonLines,
};

// A sweep experiment as loaded from a config file: the sweep definition,
// the trial plan, and where/how to write results. Spectrum paths are
// resolved relative to the config file's directory so configs stay
// committable experiment records.
struct RunConfig
{
    SweepSpec spec;
    TrialPlan plan;
    std::string output_path;
    OutputFormat output_format = OutputFormat::Csv;
};

RunConfig load_run_config(const std::string &path);

// Shortest round-trip decimal representation of a double (the formatting
// used for all emitted numbers, so golden files are byte-stable).
std::string format_double(double value);

// One line per sweep row with the fixed column set
//   sweep_value, mean_capacity_bps_hz, ci_low, ci_high, mean_inv_condition,
//   siso_mean_bps_hz, k_per_m, snr_db_or_power_mode
void write_rows_csv(std::ostream &out, const std::vector<SweepRow> &rows, const PowerBudget &budget);
void write_rows_json(std::ostream &out, const std::vector<SweepRow> &rows, const PowerBudget &budget);

// Worker cap from MMWAVE_LAB_THREADS (0 or unset = auto).
unsigned threads_from_env();

} // namespace mmwave
