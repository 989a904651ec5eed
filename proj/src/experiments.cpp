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

#include "mmwave/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "mmwave/constants.hpp"
#include "mmwave/errors.hpp"
#include "mmwave/random.hpp"

namespace mmwave
{

void TrialPlan::validate() const
{
    if (trials < 1)
        throw Error(ErrorKind::Domain, "trial count must be at least 1");
    if (!(percentile_low >= 0.0 && percentile_low < percentile_high && percentile_high <= 1.0))
        throw Error(ErrorKind::Domain, "percentile bounds must satisfy 0 <= low < high <= 1");
}

namespace
{

unsigned resolve_threads(unsigned requested, int trials)
{
    unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (n == 0)
        n = 1;
    return std::min<unsigned>(n, static_cast<unsigned>(trials));
}

// Linear-interpolated empirical quantile of a sorted sample.
double quantile_sorted(const std::vector<double> &sorted, double q)
{
    const double h = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

struct TrialRecord
{
    double capacity;
    double inverse_condition;
    double siso_capacity;
};

// Evaluate trials [0, plan.trials) into per-trial slots, in parallel over
// disjoint index ranges. All randomness is a pure function of
// (seed, trial, pair), and the reduction below walks trials in index
// order, so the outcome does not depend on the thread count.
class PointEngine
{
  public:
    PointEngine(const LinkGeometry &geometry, double frequency_hz, double k_per_m,
                const PowerBudget &budget, const TrialPlan &plan, AngleMode angles)
        : geometry_(geometry), frequency_hz_(frequency_hz), k_per_m_(k_per_m), budget_(budget),
          plan_(plan), angles_(angles)
    {
        geometry_.validate();
        plan_.validate();
        if (!(k_per_m >= 0.0))
            throw Error(ErrorKind::Domain, "absorption coefficient must be non-negative");
        normalization_ = budget.mode() == PowerBudget::Mode::ConstantSnr
                             ? Normalization::ConstantSnr
                             : Normalization::RawGain;
        n_r_ = static_cast<arma::uword>(geometry_.receiver.element_count);
        n_t_ = static_cast<arma::uword>(geometry_.transmitter.element_count);
    }

    CapacityStats run(unsigned threads)
    {
        const int trials = plan_.trials;
        records_.resize(static_cast<std::size_t>(trials));
        singulars_.resize(static_cast<std::size_t>(trials));

        const unsigned workers = resolve_threads(threads, trials);
        if (workers <= 1)
        {
            run_range(0, trials);
        }
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            const int chunk = (trials + static_cast<int>(workers) - 1) / static_cast<int>(workers);
            for (unsigned w = 0; w < workers; ++w)
            {
                const int begin = static_cast<int>(w) * chunk;
                const int end = std::min(trials, begin + chunk);
                if (begin >= end)
                    break;
                pool.emplace_back([this, begin, end] {
                    try
                    {
                        run_range(begin, end);
                    }
                    catch (...)
                    {
                        std::scoped_lock lock(error_mutex_);
                        if (!error_)
                            error_ = std::current_exception();
                    }
                });
            }
            for (auto &t : pool)
                t.join();
            if (error_)
                std::rethrow_exception(error_);
        }
        return reduce();
    }

  private:
    void run_range(int begin, int end)
    {
        arma::mat betas(n_r_, n_t_);
        for (int t = begin; t < end; ++t)
        {
            const auto trial = static_cast<std::uint64_t>(t);
            LinkGeometry geometry = geometry_;
            if (angles_ == AngleMode::RandomPerTrial)
            {
                geometry.transmitter.orientation_rad =
                    constants::pi * derive_trial_stream(plan_.seed, trial, stream::angle_tx);
                geometry.receiver.orientation_rad =
                    constants::pi * derive_trial_stream(plan_.seed, trial, stream::angle_rx);
            }
            for (arma::uword i = 0; i < n_r_; ++i)
                for (arma::uword j = 0; j < n_t_; ++j)
                    betas(i, j) =
                        derive_trial_stream(plan_.seed, trial, stream::beta_base + i * n_t_ + j);

            try
            {
                const ChannelMatrix channel =
                    build_channel(geometry, frequency_hz_, k_per_m_, betas, normalization_);
                const CapacityResult result = capacity_eig(channel, budget_);
                const double siso =
                    siso_reference(budget_, frequency_hz_, geometry_.separation_m, k_per_m_,
                                   derive_trial_stream(plan_.seed, trial, stream::siso_beta));
                records_[static_cast<std::size_t>(t)] = {result.capacity_bps_hz,
                                                         result.inverse_condition, siso};
                singulars_[static_cast<std::size_t>(t)] = result.singular_values;
            }
            catch (const Error &e)
            {
                if (e.kind() == ErrorKind::Numerical)
                    throw Error(ErrorKind::Numerical,
                                "trial " + std::to_string(t) + ": " + e.what());
                throw;
            }
        }
    }

    CapacityStats reduce() const
    {
        const auto n = records_.size();
        CapacityStats stats{};
        std::vector<double> capacities(n);
        double capacity_sum = 0.0, inv_cond_sum = 0.0, siso_sum = 0.0;
        for (std::size_t t = 0; t < n; ++t)
        {
            capacities[t] = records_[t].capacity;
            capacity_sum += records_[t].capacity;
            inv_cond_sum += records_[t].inverse_condition;
            siso_sum += records_[t].siso_capacity;
        }
        stats.mean = capacity_sum / static_cast<double>(n);
        stats.mean_inverse_condition = inv_cond_sum / static_cast<double>(n);
        stats.siso_mean = siso_sum / static_cast<double>(n);

        const std::size_t n_sv = singulars_.front().size();
        stats.mean_singular_values.assign(n_sv, 0.0);
        for (const auto &sv : singulars_)
            for (std::size_t s = 0; s < n_sv; ++s)
                stats.mean_singular_values[s] += sv[s];
        for (double &s : stats.mean_singular_values)
            s /= static_cast<double>(n);

        std::sort(capacities.begin(), capacities.end());
        stats.ci_low = quantile_sorted(capacities, plan_.percentile_low);
        stats.ci_high = quantile_sorted(capacities, plan_.percentile_high);
        return stats;
    }

    LinkGeometry geometry_;
    double frequency_hz_;
    double k_per_m_;
    PowerBudget budget_;
    TrialPlan plan_;
    AngleMode angles_;
    Normalization normalization_;
    arma::uword n_r_ = 0;
    arma::uword n_t_ = 0;

    std::vector<TrialRecord> records_;
    std::vector<std::vector<double>> singulars_;
    std::mutex error_mutex_;
    std::exception_ptr error_;
};

double coefficient_at(const SweepSpec &spec, double frequency_hz)
{
    if (spec.constant_k)
        return *spec.constant_k;
    return mixture_coefficient(*spec.mixture, spec.spectra, frequency_hz).value;
}

} // namespace

void SweepSpec::validate() const
{
    if (grid.empty())
        throw Error(ErrorKind::Config, "sweep grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw Error(ErrorKind::Ordering, "sweep grid must be strictly increasing");
    geometry.validate();

    const bool has_atmosphere = constant_k.has_value() || mixture.has_value();
    if (variable != SweepVariable::AbsorptionCoefficient && !has_atmosphere)
        throw Error(ErrorKind::Config, "sweep needs an atmosphere: a constant k or a mixture");
    if (constant_k && !(*constant_k >= 0.0))
        throw Error(ErrorKind::Domain, "constant absorption coefficient must be non-negative");

    switch (variable)
    {
    case SweepVariable::Frequency:
        for (double f : grid)
            if (!(f > 0.0))
                throw Error(ErrorKind::Domain, "sweep frequencies must be positive");
        break;
    case SweepVariable::AbsorptionCoefficient:
        for (double k : grid)
            if (!(k >= 0.0))
                throw Error(ErrorKind::Domain, "sweep coefficients must be non-negative");
        break;
    case SweepVariable::AntennaCount:
        for (double n : grid)
            if (!(n >= 1.0) || n != std::floor(n))
                throw Error(ErrorKind::Domain, "antenna counts must be positive integers");
        break;
    }
    if (variable != SweepVariable::Frequency && !(frequency_hz > 0.0))
        throw Error(ErrorKind::Domain, "operating frequency must be positive");

    // Coverage of every frequency this sweep will evaluate, checked before
    // any computation starts.
    if (mixture && !constant_k)
    {
        std::vector<double> needed;
        if (variable == SweepVariable::Frequency)
            needed = grid;
        else
            needed = {frequency_hz};
        for (const auto &component : mixture->components())
        {
            const AbsorptionSpectrum &s = spectra.find(component.species);
            for (double f : needed)
                if (!s.covers(f))
                    throw Error(ErrorKind::Range,
                                "spectrum for " + component.species + " does not cover " +
                                    std::to_string(f) + " Hz");
        }
    }
}

CapacityStats run_point(const LinkGeometry &geometry, double frequency_hz, double k_per_m,
                        const PowerBudget &budget, const TrialPlan &plan, unsigned threads)
{
    PointEngine engine(geometry, frequency_hz, k_per_m, budget, plan, AngleMode::Fixed);
    return engine.run(threads);
}

std::vector<SweepRow> sweep(const SweepSpec &spec, const TrialPlan &plan, unsigned threads)
{
    spec.validate();
    plan.validate();

    std::vector<SweepRow> rows;
    rows.reserve(spec.grid.size());
    for (const double value : spec.grid)
    {
        double frequency = spec.frequency_hz;
        double k = 0.0;
        LinkGeometry geometry = spec.geometry;
        switch (spec.variable)
        {
        case SweepVariable::Frequency:
            frequency = value;
            k = coefficient_at(spec, frequency);
            break;
        case SweepVariable::AbsorptionCoefficient:
            k = value;
            break;
        case SweepVariable::AntennaCount:
            geometry.transmitter.element_count = static_cast<int>(value);
            geometry.receiver.element_count = static_cast<int>(value);
            k = coefficient_at(spec, frequency);
            break;
        }
        PointEngine engine(geometry, frequency, k, spec.budget, plan, spec.angles);
        rows.push_back({value, k, engine.run(threads)});
    }
    return rows;
}

} // namespace mmwave
