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

#include "mmwave/run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "mmwave/constants.hpp"
#include "mmwave/errors.hpp"

namespace mmwave
{

namespace
{

using nlohmann::json;

double require_number(const json &obj, const std::string &key)
{
    if (!obj.contains(key) || !obj[key].is_number())
        throw Error(ErrorKind::Parse, "config field '" + key + "' missing or not a number");
    return obj[key].get<double>();
}

double number_or(const json &obj, const std::string &key, double fallback)
{
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        throw Error(ErrorKind::Parse, "config field '" + key + "' must be a number");
    return obj[key].get<double>();
}

std::string require_string(const json &obj, const std::string &key)
{
    if (!obj.contains(key) || !obj[key].is_string())
        throw Error(ErrorKind::Parse, "config field '" + key + "' missing or not a string");
    return obj[key].get<std::string>();
}

std::vector<double> parse_grid(const json &g)
{
    std::vector<double> grid;
    if (g.is_array())
    {
        for (const auto &v : g)
        {
            if (!v.is_number())
                throw Error(ErrorKind::Parse, "grid entries must be numbers");
            grid.push_back(v.get<double>());
        }
        return grid;
    }
    if (g.is_object())
    {
        const double from = require_number(g, "from");
        const double to = require_number(g, "to");
        if (g.contains("step"))
        {
            const double step = require_number(g, "step");
            if (!(step > 0.0))
                throw Error(ErrorKind::Parse, "grid step must be positive");
            // half-step guard keeps the endpoint inclusive under rounding
            for (double v = from; v <= to + step * 0.5; v += step)
                grid.push_back(v);
            return grid;
        }
        if (g.contains("log_points_per_decade"))
        {
            const double per_decade = require_number(g, "log_points_per_decade");
            if (!(per_decade > 0.0) || !(from > 0.0) || !(to > from))
                throw Error(ErrorKind::Parse, "log grid needs 0 < from < to and positive density");
            const int points =
                static_cast<int>(std::round(std::log10(to / from) * per_decade)) + 1;
            for (int p = 0; p < points; ++p)
                grid.push_back(from * std::pow(10.0, static_cast<double>(p) / per_decade));
            return grid;
        }
        throw Error(ErrorKind::Parse, "grid object needs 'step' or 'log_points_per_decade'");
    }
    throw Error(ErrorKind::Parse, "grid must be an array or a range object");
}

SweepVariable parse_variable(const std::string &name)
{
    if (name == "frequency")
        return SweepVariable::Frequency;
    if (name == "absorption_coefficient")
        return SweepVariable::AbsorptionCoefficient;
    if (name == "antenna_count")
        return SweepVariable::AntennaCount;
    throw Error(ErrorKind::Parse, "unknown sweep variable '" + name + "'");
}

LinkGeometry parse_geometry(const json &g)
{
    if (!g.is_object())
        throw Error(ErrorKind::Parse, "config field 'geometry' must be an object");
    LinkGeometry geometry;
    const int n = static_cast<int>(require_number(g, "n"));
    geometry.transmitter.element_count = n;
    geometry.receiver.element_count = n;
    geometry.transmitter.spacing_wavelengths = number_or(g, "spacing_wavelengths", 0.5);
    geometry.receiver.spacing_wavelengths = geometry.transmitter.spacing_wavelengths;
    geometry.transmitter.orientation_rad =
        number_or(g, "phi_deg", 90.0) * constants::pi / 180.0;
    geometry.receiver.orientation_rad =
        number_or(g, "theta_deg", 90.0) * constants::pi / 180.0;
    geometry.separation_m = number_or(g, "distance_m", 50.0);
    return geometry;
}

PowerBudget parse_budget(const json &b)
{
    if (!b.is_object())
        throw Error(ErrorKind::Parse, "config field 'budget' must be an object");
    const std::string mode = require_string(b, "mode");
    if (mode == "constant_snr")
        return PowerBudget::constant_snr_db(require_number(b, "snr_db"));
    if (mode == "constant_power")
    {
        const double power = require_number(b, "total_power_w");
        double noise;
        if (b.contains("noise_power_dbm"))
            noise = std::pow(10.0, (require_number(b, "noise_power_dbm") - 30.0) / 10.0);
        else
            noise = require_number(b, "noise_power_w");
        return PowerBudget::constant_power(power, noise);
    }
    throw Error(ErrorKind::Parse, "budget mode must be 'constant_snr' or 'constant_power'");
}

} // namespace

RunConfig load_run_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Lookup, "cannot open config file " + path);
    json doc;
    try
    {
        doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    }
    catch (const json::exception &e)
    {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("experiment") || !doc["experiment"].is_object())
        throw Error(ErrorKind::Parse, path + ": config must contain an 'experiment' object");

    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto resolve = [&base](const std::string &p) {
        const std::filesystem::path candidate(p);
        return candidate.is_absolute() ? candidate.string() : (base / candidate).string();
    };

    const json &exp = doc["experiment"];
    RunConfig config;
    config.spec.variable = parse_variable(require_string(exp, "variable"));
    config.spec.grid = parse_grid(exp.contains("grid") ? exp["grid"] : json());
    config.spec.geometry = parse_geometry(exp.contains("geometry") ? exp["geometry"] : json());
    config.spec.budget = parse_budget(exp.contains("budget") ? exp["budget"] : json());
    if (exp.contains("frequency_hz"))
        config.spec.frequency_hz = require_number(exp, "frequency_hz");

    if (exp.contains("angles"))
    {
        const std::string mode = exp["angles"].is_string()
                                     ? exp["angles"].get<std::string>()
                                     : require_string(exp["angles"], "mode");
        if (mode == "fixed")
            config.spec.angles = AngleMode::Fixed;
        else if (mode == "random_per_trial")
            config.spec.angles = AngleMode::RandomPerTrial;
        else
            throw Error(ErrorKind::Parse, "angles mode must be 'fixed' or 'random_per_trial'");
    }

    // atmosphere: explicit constant coefficient, or mixture + spectra
    if (exp.contains("k_per_m"))
    {
        config.spec.constant_k = require_number(exp, "k_per_m");
    }
    if (exp.contains("mixture"))
    {
        const std::string name = require_string(exp, "mixture");
        bool preset = false;
        for (const auto &p : builtin_presets())
            if (p.name() == name)
            {
                config.spec.mixture = p;
                preset = true;
                break;
            }
        if (!preset)
            config.spec.mixture = load_mixture_file(resolve(name));
    }
    if (doc.contains("spectra"))
    {
        if (!doc["spectra"].is_array())
            throw Error(ErrorKind::Parse, "config field 'spectra' must be an array");
        for (const auto &entry : doc["spectra"])
        {
            const std::string species = require_string(entry, "species");
            const std::string file = resolve(require_string(entry, "path"));
            const double temperature = number_or(entry, "temperature_k", 273.0);
            const double pressure = number_or(entry, "pressure_atm", 1.0);
            config.spec.spectra.add(load_spectrum_file(file, species, temperature, pressure));
        }
    }

    config.plan.trials = static_cast<int>(number_or(doc, "trials", 5000));
    config.plan.seed = static_cast<std::uint64_t>(number_or(doc, "seed", 1));
    config.plan.percentile_low = number_or(doc, "percentile_low", 0.05);
    config.plan.percentile_high = number_or(doc, "percentile_high", 0.95);

    config.output_path = doc.contains("output_path") ? require_string(doc, "output_path") : "";
    if (doc.contains("output_format"))
    {
        const std::string f = require_string(doc, "output_format");
        if (f == "csv")
            config.output_format = OutputFormat::Csv;
        else if (f == "json")
            config.output_format = OutputFormat::JsonLines;
        else
            throw Error(ErrorKind::Parse, "output_format must be 'csv' or 'json'");
    }

    config.plan.validate();
    config.spec.validate();
    return config;
}

std::string format_double(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

namespace
{

std::string budget_column(const PowerBudget &budget)
{
    if (budget.mode() == PowerBudget::Mode::ConstantSnr)
        return "snr_db=" + format_double(10.0 * std::log10(budget.snr()));
    return "power_w=" + format_double(budget.total_power_w()) +
           ";noise_w=" + format_double(budget.noise_power_w());
}

} // namespace

void write_rows_csv(std::ostream &out, const std::vector<SweepRow> &rows,
                    const PowerBudget &budget)
{
    out << "sweep_value,mean_capacity_bps_hz,ci_low,ci_high,mean_inv_condition,"
           "siso_mean_bps_hz,k_per_m,snr_db_or_power_mode\n";
    const std::string mode = budget_column(budget);
    for (const auto &row : rows)
        out << format_double(row.value) << ',' << format_double(row.stats.mean) << ','
            << format_double(row.stats.ci_low) << ',' << format_double(row.stats.ci_high) << ','
            << format_double(row.stats.mean_inverse_condition) << ','
            << format_double(row.stats.siso_mean) << ',' << format_double(row.k_per_m) << ','
            << mode << '\n';
}

void write_rows_json(std::ostream &out, const std::vector<SweepRow> &rows,
                     const PowerBudget &budget)
{
    const std::string mode = budget_column(budget);
    for (const auto &row : rows)
    {
        json line;
        line["sweep_value"] = row.value;
        line["mean_capacity_bps_hz"] = row.stats.mean;
        line["ci_low"] = row.stats.ci_low;
        line["ci_high"] = row.stats.ci_high;
        line["mean_inv_condition"] = row.stats.mean_inverse_condition;
        line["siso_mean_bps_hz"] = row.stats.siso_mean;
        line["k_per_m"] = row.k_per_m;
        line["snr_db_or_power_mode"] = mode;
        line["mean_singular_values"] = row.stats.mean_singular_values;
        out << line.dump() << '\n';
    }
}

unsigned threads_from_env()
{
    const char *raw = std::getenv("MMWAVE_LAB_THREADS");
    if (raw == nullptr || *raw == '\0')
        return 0;
    char *end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0)
        throw Error(ErrorKind::Parse,
                    std::string("MMWAVE_LAB_THREADS must be a non-negative integer, got '") +
                        raw + "'");
    return static_cast<unsigned>(value);
}

} // namespace mmwave
