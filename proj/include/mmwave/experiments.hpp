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
#include <optional>
#include <vector>

#include "mmwave/absorption.hpp"
#include "mmwave/geometry.hpp"
#include "mmwave/mimo.hpp"

namespace mmwave
{

// Monte-Carlo execution plan. The confidence interval is the empirical
// percentile span of the per-trial capacities.
struct TrialPlan
{
    int trials = 5000;
    std::uint64_t seed = 1;
    double percentile_low = 0.05;
    double percentile_high = 0.95;

    void validate() const;
};

// Per-point Monte-Carlo summary. `mean` is the average of per-trial
// capacities (not the capacity of any averaged channel).
struct CapacityStats
{
    double mean;
    double ci_low;
    double ci_high;
    double mean_inverse_condition;
    std::vector<double> mean_singular_values; // descending
    double siso_mean;
};

enum class AngleMode
{
    Fixed,          // use the geometry's phi/theta as given
    RandomPerTrial, // redraw phi, theta uniformly on [0, pi) each trial
};

enum class SweepVariable
{
    Frequency,
    AbsorptionCoefficient,
    AntennaCount,
};

// A sweep definition: what varies, over which grid, in which medium, with
// which geometry and power assumptions. The atmosphere is either an
// explicit constant coefficient or a gas mixture evaluated against a
// spectrum library at each frequency.
struct SweepSpec
{
    SweepVariable variable = SweepVariable::Frequency;
    std::vector<double> grid;

    std::optional<double> constant_k;     // explicit medium coefficient
    std::optional<GasMixture> mixture;    // evaluated against `spectra`
    SpectrumLibrary spectra;

    double frequency_hz = 60e9;           // operating f for non-frequency sweeps
    LinkGeometry geometry;
    PowerBudget budget = PowerBudget::constant_snr_db(20.0);
    AngleMode angles = AngleMode::Fixed;

    // Grid/consistency checks plus spectrum-coverage checks for every grid
    // point, run before any computation starts.
    void validate() const;
};

struct SweepRow
{
    double value;     // the swept quantity
    double k_per_m;   // medium coefficient in effect at this row
    CapacityStats stats;
};

// Evaluate one (geometry, f, k) point: `plan.trials` independent phase
// matrices from counter-based streams, per-trial capacity via the singular
// value route, percentile CI, averaged diagnostics, and the 1x1 reference
// mean under the same plan. `threads` = 0 picks the hardware concurrency.
// Results are independent of thread count.
CapacityStats run_point(const LinkGeometry &geometry, double frequency_hz, double k_per_m,
                        const PowerBudget &budget, const TrialPlan &plan, unsigned threads = 0);

// One CapacityStats row per grid value. Deterministic for a fixed
// (spec, plan, seed) regardless of parallelism.
std::vector<SweepRow> sweep(const SweepSpec &spec, const TrialPlan &plan, unsigned threads = 0);

} // namespace mmwave
