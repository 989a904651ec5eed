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

namespace mmwave
{

struct SpectrumSample
{
    double frequency_hz;
    double k_per_m; // absorption coefficient, nepers per meter
};

// Sampled absorption-coefficient curve of one molecular species at a fixed
// temperature and pressure. Immutable after construction; construction
// validates ordering and value domains.
class AbsorptionSpectrum
{
  public:
    AbsorptionSpectrum(std::string species, double temperature_k, double pressure_atm,
                       std::vector<SpectrumSample> samples);

    const std::string &species() const noexcept { return species_; }
    double temperature_k() const noexcept { return temperature_k_; }
    double pressure_atm() const noexcept { return pressure_atm_; }
    const std::vector<SpectrumSample> &samples() const noexcept { return samples_; }

    double min_frequency_hz() const noexcept { return samples_.front().frequency_hz; }
    double max_frequency_hz() const noexcept { return samples_.back().frequency_hz; }
    bool covers(double frequency_hz) const noexcept
    {
        return frequency_hz >= min_frequency_hz() && frequency_hz <= max_frequency_hz();
    }

  private:
    std::string species_;
    double temperature_k_;
    double pressure_atm_;
    std::vector<SpectrumSample> samples_;
};

// Named set of (species, mole fraction) pairs. Fractions may sum to less
// than one when trace gases are omitted.
class GasMixture
{
  public:
    struct Component
    {
        std::string species;
        double mole_fraction;
    };

    GasMixture(std::string name, std::vector<Component> components);

    const std::string &name() const noexcept { return name_; }
    const std::vector<Component> &components() const noexcept { return components_; }

  private:
    std::string name_;
    std::vector<Component> components_;
};

struct MediumCoefficient
{
    double value;        // nepers per meter
    double frequency_hz;
};

// Keyed collection of per-species spectra used to evaluate mixtures.
class SpectrumLibrary
{
  public:
    void add(AbsorptionSpectrum spectrum);
    bool contains(const std::string &species) const;
    const AbsorptionSpectrum &find(const std::string &species) const; // Lookup error if absent
    std::size_t size() const noexcept { return spectra_.size(); }

  private:
    std::vector<AbsorptionSpectrum> spectra_;
};

// Parse a spectrum from CSV text with header `frequency_hz,k_per_m`.
// Lines starting with '#' and blank lines are skipped. Rows must be in
// strictly ascending frequency order; out-of-order input is rejected, not
// reordered. Errors carry the offending line number.
AbsorptionSpectrum parse_spectrum(std::istream &source, const std::string &species,
                                  double temperature_k, double pressure_atm);

AbsorptionSpectrum load_spectrum_file(const std::string &path, const std::string &species,
                                      double temperature_k, double pressure_atm);

// Write a spectrum back to the same CSV schema. Numbers use the shortest
// round-trip representation, so parse(write(s)) reproduces s exactly.
void write_spectrum(std::ostream &out, const AbsorptionSpectrum &spectrum);

// Linear interpolation between bracketing samples; exact at sample points.
// Queries outside the sampled range are a Range error (no extrapolation:
// absorption spikes make extrapolation meaningless).
MediumCoefficient interpolate(const AbsorptionSpectrum &spectrum, double frequency_hz);

// Medium absorption coefficient of a mixture: the mole-fraction-weighted
// sum of the per-species coefficients at the given frequency. All involved
// spectra must share temperature and pressure.
MediumCoefficient mixture_coefficient(const GasMixture &mixture, const SpectrumLibrary &spectra,
                                      double frequency_hz);

// The five bundled USA-model standard atmospheres (sea-level mixing ratios).
const std::vector<GasMixture> &builtin_presets();

// Preset lookup by exact name; Lookup error if unknown.
const GasMixture &find_preset(const std::string &name);

// Mixture document: JSON object mapping species name -> mole fraction,
// optionally wrapped as {"name": ..., "components": {...}}.
GasMixture load_mixture(std::istream &in, const std::string &fallback_name);
GasMixture load_mixture_file(const std::string &path);

} // namespace mmwave
