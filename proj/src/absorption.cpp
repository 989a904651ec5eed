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

#include "mmwave/absorption.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mmwave/errors.hpp"

namespace mmwave
{

namespace
{

std::string trim(const std::string &s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string &text, int line_number)
{
    const std::string t = trim(text);
    double value = 0.0;
    const char *first = t.data();
    const char *last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line_number) + ": not a number: '" + t + "'");
    return value;
}

} // namespace

AbsorptionSpectrum::AbsorptionSpectrum(std::string species, double temperature_k,
                                       double pressure_atm, std::vector<SpectrumSample> samples)
    : species_(std::move(species)),
      temperature_k_(temperature_k),
      pressure_atm_(pressure_atm),
      samples_(std::move(samples))
{
    if (species_.empty())
        throw Error(ErrorKind::Domain, "spectrum species name is empty");
    if (!(temperature_k_ > 0.0))
        throw Error(ErrorKind::Domain, "temperature must be positive, got " +
                                           std::to_string(temperature_k_));
    if (!(pressure_atm_ > 0.0))
        throw Error(ErrorKind::Domain,
                    "pressure must be positive, got " + std::to_string(pressure_atm_));
    if (samples_.size() < 2)
        throw Error(ErrorKind::Domain, "spectrum needs at least 2 samples, got " +
                                           std::to_string(samples_.size()));
    for (std::size_t i = 0; i < samples_.size(); ++i)
    {
        if (!(samples_[i].k_per_m >= 0.0))
            throw Error(ErrorKind::Domain, "negative absorption coefficient at sample " +
                                               std::to_string(i));
        if (i > 0 && !(samples_[i].frequency_hz > samples_[i - 1].frequency_hz))
            throw Error(ErrorKind::Ordering,
                        "sample frequencies must be strictly increasing at sample " +
                            std::to_string(i));
    }
}

GasMixture::GasMixture(std::string name, std::vector<Component> components)
    : name_(std::move(name)), components_(std::move(components))
{
    double sum = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i)
    {
        const auto &c = components_[i];
        if (!(c.mole_fraction >= 0.0 && c.mole_fraction <= 1.0))
            throw Error(ErrorKind::Domain,
                        "mole fraction of " + c.species + " outside [0,1]");
        for (std::size_t j = 0; j < i; ++j)
            if (components_[j].species == c.species)
                throw Error(ErrorKind::Domain, "duplicate species " + c.species + " in mixture");
        sum += c.mole_fraction;
    }
    if (sum > 1.0 + 1e-6)
        throw Error(ErrorKind::Domain,
                    "mole fractions of '" + name_ + "' sum to " + std::to_string(sum) + " > 1");
}

void SpectrumLibrary::add(AbsorptionSpectrum spectrum)
{
    if (contains(spectrum.species()))
        throw Error(ErrorKind::Consistency, "duplicate spectrum for species " + spectrum.species());
    spectra_.push_back(std::move(spectrum));
}

bool SpectrumLibrary::contains(const std::string &species) const
{
    return std::any_of(spectra_.begin(), spectra_.end(),
                       [&](const AbsorptionSpectrum &s) { return s.species() == species; });
}

const AbsorptionSpectrum &SpectrumLibrary::find(const std::string &species) const
{
    for (const auto &s : spectra_)
        if (s.species() == species)
            return s;
    throw Error(ErrorKind::Lookup, "no spectrum loaded for species " + species);
}

AbsorptionSpectrum parse_spectrum(std::istream &source, const std::string &species,
                                  double temperature_k, double pressure_atm)
{
    std::vector<SpectrumSample> samples;
    std::string line;
    int line_number = 0;
    bool header_seen = false;
    while (std::getline(source, line))
    {
        ++line_number;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        if (!header_seen)
        {
            // header must be exactly the two expected column names
            std::string compact;
            for (char c : t)
                if (c != ' ' && c != '\t')
                    compact += c;
            if (compact != "frequency_hz,k_per_m")
                throw Error(ErrorKind::Parse, "line " + std::to_string(line_number) +
                                                  ": expected header 'frequency_hz,k_per_m'");
            header_seen = true;
            continue;
        }
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(line_number) + ": expected 2 comma-separated fields");
        const double f = parse_number(t.substr(0, comma), line_number);
        const double k = parse_number(t.substr(comma + 1), line_number);
        if (!(k >= 0.0))
            throw Error(ErrorKind::Domain, "line " + std::to_string(line_number) +
                                               ": negative absorption coefficient");
        if (!samples.empty() && !(f > samples.back().frequency_hz))
            throw Error(ErrorKind::Ordering, "line " + std::to_string(line_number) +
                                                 ": frequencies must be strictly increasing");
        samples.push_back({f, k});
    }
    if (!header_seen)
        throw Error(ErrorKind::Parse, "empty spectrum: missing header");
    return AbsorptionSpectrum(species, temperature_k, pressure_atm, std::move(samples));
}

AbsorptionSpectrum load_spectrum_file(const std::string &path, const std::string &species,
                                      double temperature_k, double pressure_atm)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Lookup, "cannot open spectrum file " + path);
    try
    {
        return parse_spectrum(in, species, temperature_k, pressure_atm);
    }
    catch (const Error &e)
    {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

void write_spectrum(std::ostream &out, const AbsorptionSpectrum &spectrum)
{
    auto shortest = [](double v) {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, ptr);
    };
    out << "frequency_hz,k_per_m\n";
    for (const auto &s : spectrum.samples())
        out << shortest(s.frequency_hz) << ',' << shortest(s.k_per_m) << '\n';
}

MediumCoefficient interpolate(const AbsorptionSpectrum &spectrum, double frequency_hz)
{
    const auto &samples = spectrum.samples();
    if (!spectrum.covers(frequency_hz))
    {
        std::ostringstream msg;
        msg << spectrum.species() << ": frequency " << frequency_hz
            << " Hz outside sampled range [" << spectrum.min_frequency_hz() << ", "
            << spectrum.max_frequency_hz() << "] Hz";
        throw Error(ErrorKind::Range, msg.str());
    }
    const auto upper = std::lower_bound(
        samples.begin(), samples.end(), frequency_hz,
        [](const SpectrumSample &s, double f) { return s.frequency_hz < f; });
    if (upper->frequency_hz == frequency_hz) // exact at sample points
        return {upper->k_per_m, frequency_hz};
    const auto lower = upper - 1;
    const double t = (frequency_hz - lower->frequency_hz) /
                     (upper->frequency_hz - lower->frequency_hz);
    return {lower->k_per_m + t * (upper->k_per_m - lower->k_per_m), frequency_hz};
}

MediumCoefficient mixture_coefficient(const GasMixture &mixture, const SpectrumLibrary &spectra,
                                      double frequency_hz)
{
    double value = 0.0;
    const AbsorptionSpectrum *reference = nullptr;
    for (const auto &component : mixture.components())
    {
        const AbsorptionSpectrum &s = spectra.find(component.species);
        if (reference == nullptr)
            reference = &s;
        else if (s.temperature_k() != reference->temperature_k() ||
                 s.pressure_atm() != reference->pressure_atm())
            throw Error(ErrorKind::Consistency,
                        "spectra for " + reference->species() + " and " + s.species() +
                            " differ in temperature or pressure");
        value += component.mole_fraction * interpolate(s, frequency_hz).value;
    }
    return {value, frequency_hz};
}

namespace
{

GasMixture make_usa_model(const std::string &climate, double h2o, double o3, double n2o,
                          double n2)
{
    // Percent mixing ratios; CO2/CO/CH4/O2 are common to all five models.
    return GasMixture("USA model, " + climate,
                      {{"H2O", h2o / 100.0},
                       {"CO2", 0.033000 / 100.0},
                       {"O3", o3 / 100.0},
                       {"N2O", n2o / 100.0},
                       {"CO", 0.000015 / 100.0},
                       {"CH4", 0.000170 / 100.0},
                       {"O2", 20.900001 / 100.0},
                       {"N2", n2 / 100.0}});
}

} // namespace

const std::vector<GasMixture> &builtin_presets()
{
    static const std::vector<GasMixture> presets = {
        make_usa_model("mean latitude, summer", 1.860000, 0.000003, 0.000032, 77.206000),
        make_usa_model("mean latitude, winter", 0.432000, 0.000003, 0.000032, 78.634779),
        make_usa_model("high latitude, summer", 1.190000, 0.000002, 0.000031, 77.876781),
        make_usa_model("high latitude, winter", 0.141000, 0.000002, 0.000032, 78.925780),
        make_usa_model("tropics", 2.590000, 0.000003, 0.000032, 76.476779),
    };
    return presets;
}

const GasMixture &find_preset(const std::string &name)
{
    for (const auto &preset : builtin_presets())
        if (preset.name() == name)
            return preset;
    throw Error(ErrorKind::Lookup, "unknown preset '" + name + "'");
}

GasMixture load_mixture(std::istream &in, const std::string &fallback_name)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw Error(ErrorKind::Parse, std::string("mixture document: ") + e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorKind::Parse, "mixture document must be a JSON object");

    std::string name = fallback_name;
    const nlohmann::json *components = &doc;
    if (doc.contains("components"))
    {
        if (doc.contains("name") && doc["name"].is_string())
            name = doc["name"].get<std::string>();
        components = &doc["components"];
        if (!components->is_object())
            throw Error(ErrorKind::Parse, "mixture 'components' must be an object");
    }

    std::vector<GasMixture::Component> parsed;
    for (auto it = components->begin(); it != components->end(); ++it)
    {
        if (it.key() == "name")
            continue;
        if (!it.value().is_number())
            throw Error(ErrorKind::Parse, "mole fraction of " + it.key() + " must be a number");
        parsed.push_back({it.key(), it.value().get<double>()});
    }
    return GasMixture(name, std::move(parsed));
}

GasMixture load_mixture_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Lookup, "cannot open mixture file " + path);
    auto stem = path;
    if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
        stem = stem.substr(0, dot);
    return load_mixture(in, stem);
}

} // namespace mmwave
