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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmwave/constants.hpp"
#include "mmwave/errors.hpp"
#include "mmwave/run_config.hpp"

namespace
{

using namespace mmwave;

// exit codes: 0 ok, 2 config/usage, 3 sampled-range, 4 numerical
constexpr int exit_usage = 2;

struct PointArgs
{
    double frequency_hz = 60e9;
    double distance_m = 50.0;
    int n = 3;
    double spacing_wavelengths = 0.5;
    double phi_deg = 90.0;
    double theta_deg = 90.0;
    std::optional<double> k;
    std::optional<std::string> preset;
    std::string spectra_dir;
    double temperature_k = 273.0;
    double pressure_atm = 1.0;
    std::optional<double> snr_db;
    std::optional<double> power_w;
    double noise_dbm = -100.0;
    int trials = 5000;
    std::uint64_t seed = 1;
};

SpectrumLibrary load_spectra_dir(const std::string &dir, const GasMixture &mixture,
                                 double temperature_k, double pressure_atm)
{
    SpectrumLibrary library;
    for (const auto &component : mixture.components())
    {
        std::string lower = component.species;
        for (char &c : lower)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const auto path = std::filesystem::path(dir) / (lower + ".csv");
        library.add(load_spectrum_file(path.string(), component.species, temperature_k,
                                       pressure_atm));
    }
    return library;
}

int run_sweep(const std::string &config_path)
{
    const RunConfig config = load_run_config(config_path);
    if (config.output_path.empty())
        throw Error(ErrorKind::Parse, "config is missing 'output_path'");

    const auto rows = sweep(config.spec, config.plan, threads_from_env());

    // results are fully computed before the output file is created, so a
    // failed run leaves nothing half-written behind
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Lookup, "cannot write output file " + config.output_path);
    if (config.output_format == OutputFormat::Csv)
        write_rows_csv(out, rows, config.spec.budget);
    else
        write_rows_json(out, rows, config.spec.budget);
    std::cerr << "wrote " << rows.size() << " rows to " << config.output_path << "\n";
    return 0;
}

int run_point(const PointArgs &args)
{
    if (args.k && args.preset)
        throw Error(ErrorKind::Config, "--k and --preset are mutually exclusive");
    if (!args.k && !args.preset)
        throw Error(ErrorKind::Config, "one of --k or --preset is required");
    if (args.k && !(*args.k >= 0.0))
        throw Error(ErrorKind::Domain, "absorption coefficient must be non-negative");
    if (args.snr_db && args.power_w)
        throw Error(ErrorKind::Config, "--snr-db and --power-w are mutually exclusive");

    double k = 0.0;
    if (args.k)
    {
        k = *args.k;
    }
    else
    {
        if (args.spectra_dir.empty())
            throw Error(ErrorKind::Config, "--preset requires --spectra-dir");
        const GasMixture &mixture = find_preset(*args.preset);
        const SpectrumLibrary library =
            load_spectra_dir(args.spectra_dir, mixture, args.temperature_k, args.pressure_atm);
        k = mixture_coefficient(mixture, library, args.frequency_hz).value;
    }

    const PowerBudget budget =
        args.power_w
            ? PowerBudget::constant_power(*args.power_w,
                                          std::pow(10.0, (args.noise_dbm - 30.0) / 10.0))
            : PowerBudget::constant_snr_db(args.snr_db.value_or(20.0));

    LinkGeometry geometry;
    geometry.transmitter.element_count = args.n;
    geometry.receiver.element_count = args.n;
    geometry.transmitter.spacing_wavelengths = args.spacing_wavelengths;
    geometry.receiver.spacing_wavelengths = args.spacing_wavelengths;
    geometry.transmitter.orientation_rad = args.phi_deg * constants::pi / 180.0;
    geometry.receiver.orientation_rad = args.theta_deg * constants::pi / 180.0;
    geometry.separation_m = args.distance_m;

    TrialPlan plan;
    plan.trials = args.trials;
    plan.seed = args.seed;

    const CapacityStats stats =
        mmwave::run_point(geometry, args.frequency_hz, k, budget, plan, threads_from_env());

    nlohmann::json out;
    out["frequency_hz"] = args.frequency_hz;
    out["distance_m"] = args.distance_m;
    out["n"] = args.n;
    out["k_per_m"] = k;
    out["trials"] = plan.trials;
    out["seed"] = plan.seed;
    out["mean_capacity_bps_hz"] = stats.mean;
    out["ci_low"] = stats.ci_low;
    out["ci_high"] = stats.ci_high;
    out["mean_inv_condition"] = stats.mean_inverse_condition;
    out["mean_singular_values"] = stats.mean_singular_values;
    out["siso_mean_bps_hz"] = stats.siso_mean;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_presets()
{
    for (const auto &preset : builtin_presets())
    {
        std::printf("%s\n", preset.name().c_str());
        bool first = true;
        for (const auto &component : preset.components())
        {
            std::printf("%s%s: %.6f", first ? "  " : "   ", component.species.c_str(),
                        component.mole_fraction * 100.0);
            first = false;
        }
        std::printf("\n");
    }
    return 0;
}

int run_validate(const std::string &config_path)
{
    const RunConfig config = load_run_config(config_path);
    std::cout << "ok: " << config_path << " (" << config.spec.grid.size() << " grid points, "
              << config.plan.trials << " trials)\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"millimeter-wave MIMO capacity simulator with molecular absorption "
                 "and re-radiation"};
    app.require_subcommand(1);

    std::string sweep_config;
    auto *cmd_sweep = app.add_subcommand("sweep", "run a sweep described by a config file");
    cmd_sweep->add_option("config", sweep_config, "JSON config file")->required();

    PointArgs point;
    auto *cmd_point = app.add_subcommand("point", "evaluate a single operating point");
    cmd_point->add_option("--f", point.frequency_hz, "carrier frequency in Hz");
    cmd_point->add_option("--d", point.distance_m, "link distance in meters");
    cmd_point->add_option("--n", point.n, "antennas per side");
    cmd_point->add_option("--spacing-wl", point.spacing_wavelengths, "element spacing in wavelengths");
    cmd_point->add_option("--phi-deg", point.phi_deg, "transmitter array angle in degrees");
    cmd_point->add_option("--theta-deg", point.theta_deg, "receiver array angle in degrees");
    cmd_point->add_option("--k", point.k, "medium absorption coefficient in nepers/m");
    cmd_point->add_option("--preset", point.preset, "gas mixture preset name");
    cmd_point->add_option("--spectra-dir", point.spectra_dir,
                          "directory with per-species CSV spectra (<species>.csv)");
    cmd_point->add_option("--temperature-k", point.temperature_k, "spectrum temperature in K");
    cmd_point->add_option("--pressure-atm", point.pressure_atm, "spectrum pressure in atm");
    cmd_point->add_option("--snr-db", point.snr_db, "constant reception SNR in dB");
    cmd_point->add_option("--power-w", point.power_w, "constant transmit power in W");
    cmd_point->add_option("--noise-dbm", point.noise_dbm, "noise power in dBm (with --power-w)");
    cmd_point->add_option("--trials", point.trials, "Monte-Carlo trials");
    cmd_point->add_option("--seed", point.seed, "random seed");

    auto *cmd_presets = app.add_subcommand("presets", "list built-in gas mixtures");

    std::string validate_config;
    auto *cmd_validate =
        app.add_subcommand("validate", "parse a config and its data files, run nothing");
    cmd_validate->add_option("config", validate_config, "JSON config file")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try
    {
        if (cmd_sweep->parsed())
            return run_sweep(sweep_config);
        if (cmd_point->parsed())
            return run_point(point);
        if (cmd_presets->parsed())
            return run_presets();
        if (cmd_validate->parsed())
            return run_validate(validate_config);
    }
    catch (const Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}
