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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "mmwave/errors.hpp"
#include "mmwave/run_config.hpp"

namespace fs = std::filesystem;

namespace
{

const std::string tool = MMWAVE_TOOL_PATH;
const std::string data_dir = MMWAVE_DATA_DIR;

struct RunResult
{
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("mmwave-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_tool(const std::string &args, const std::string &env = "")
{
    const fs::path out = scratch_dir() / "stdout.txt";
    const fs::path err = scratch_dir() / "stderr.txt";
    const std::string cmd = env + " \"" + tool + "\" " + args + " > \"" + out.string() +
                            "\" 2> \"" + err.string() + "\"";
    const int rc = std::system(("env " + cmd).c_str());
    RunResult result;
    result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

// config with a tiny synthetic-atmosphere frequency sweep
std::string sweep_config_json(const std::string &output_path, int trials = 120)
{
    std::ostringstream json;
    json << R"({
  "experiment": {
    "variable": "frequency",
    "grid": [55e9, 60e9, 65e9],
    "geometry": {"n": 3, "spacing_wavelengths": 0.5, "phi_deg": 90, "theta_deg": 90, "distance_m": 50},
    "budget": {"mode": "constant_snr", "snr_db": 20},
    "mixture": "USA model, tropics",
    "angles": "fixed"
  },
  "spectra": [
    {"species": "H2O", "path": ")" << data_dir << R"(/synthetic/h2o.csv"},
    {"species": "CO2", "path": ")" << data_dir << R"(/synthetic/co2.csv"},
    {"species": "O3", "path": ")" << data_dir << R"(/synthetic/o3.csv"},
    {"species": "N2O", "path": ")" << data_dir << R"(/synthetic/n2o.csv"},
    {"species": "CO", "path": ")" << data_dir << R"(/synthetic/co.csv"},
    {"species": "CH4", "path": ")" << data_dir << R"(/synthetic/ch4.csv"},
    {"species": "O2", "path": ")" << data_dir << R"(/synthetic/o2.csv"},
    {"species": "N2", "path": ")" << data_dir << R"(/synthetic/n2.csv"}
  ],
  "trials": )" << trials << R"(,
  "seed": 7,
  "output_path": ")" << output_path << R"(",
  "output_format": "csv"
})";
    return json.str();
}

} // namespace

TEST_CASE("presets: five mixtures echoed at full precision")
{
    const auto result = run_tool("presets");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("USA model, tropics") != std::string::npos);
    CHECK(result.out.find("H2O: 2.590000") != std::string::npos);
    CHECK(result.out.find("USA model, high latitude, winter") != std::string::npos);
    CHECK(result.out.find("H2O: 0.141000") != std::string::npos);
    CHECK(result.out.find("O2: 20.900001") != std::string::npos);

    int preset_count = 0;
    std::istringstream lines(result.out);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind("USA model", 0) == 0)
            ++preset_count;
    CHECK(preset_count == 5);
}

TEST_CASE("point: vacuum SISO anchor")
{
    const auto result = run_tool("point --n 1 --snr-db 20 --k 0 --trials 50");
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["mean_capacity_bps_hz"].get<double>() ==
          doctest::Approx(6.6582114827517955).epsilon(1e-9));
    CHECK(doc["k_per_m"].get<double>() == 0.0);
    CHECK(doc["n"].get<int>() == 1);
}

TEST_CASE("point: saturated 2x2 relative to SISO")
{
    const auto result =
        run_tool("point --n 2 --f 60e9 --d 50 --k 1.0 --snr-db 20 --trials 3000 --seed 4");
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    const double mean = doc["mean_capacity_bps_hz"].get<double>();
    const double siso = doc["siso_mean_bps_hz"].get<double>();
    // trial-averaged ratio for i.i.d. uniform entry phases is 1.757
    CHECK(mean / siso == doctest::Approx(1.757).epsilon(0.02));
}

TEST_CASE("point: flag validation maps to usage exit code")
{
    CHECK(run_tool("point --k -1 --n 1").exit_code == 2);
    CHECK(run_tool("point --k 0.1 --preset \"USA model, tropics\"").exit_code == 2);
    CHECK(run_tool("point").exit_code == 2);                 // no atmosphere chosen
    CHECK(run_tool("point --k 0 --snr-db 20 --power-w 1").exit_code == 2);
    CHECK(run_tool("bogus-subcommand").exit_code == 2);
}

TEST_CASE("point: preset atmosphere from the bundled spectra")
{
    const auto result = run_tool("point --n 1 --preset \"USA model, tropics\" --spectra-dir \"" +
                                 data_dir + "/synthetic\" --f 60e9 --trials 20");
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["k_per_m"].get<double>() == doctest::Approx(2.7e-2).epsilon(0.02));
}

TEST_CASE("sweep: deterministic output files across runs and thread counts")
{
    const fs::path dir = scratch_dir();
    const fs::path cfg = dir / "sweep.json";
    const fs::path out1 = dir / "run1.csv";
    const fs::path out2 = dir / "run2.csv";
    const fs::path out3 = dir / "run3.csv";
    {
        std::ofstream c(cfg);
        c << sweep_config_json("run1.csv");
    }
    // output_path is relative to the working directory; run from `dir`
    auto run_with = [&](const std::string &output, const std::string &threads) {
        {
            std::ofstream c(cfg);
            c << sweep_config_json(output);
        } // flushed before the child process reads it
        const std::string cmd = "env MMWAVE_LAB_THREADS=" + threads + " sh -c 'cd \"" +
                                dir.string() + "\" && \"" + tool + "\" sweep sweep.json' " +
                                "> /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    REQUIRE(run_with("run1.csv", "1") == 0);
    REQUIRE(run_with("run2.csv", "1") == 0);
    REQUIRE(run_with("run3.csv", "8") == 0);

    const std::string a = slurp(out1), b = slurp(out2), c3 = slurp(out3);
    REQUIRE(!a.empty());
    CHECK(a == b);
    CHECK(a == c3);

    // the emitted CSV is parseable by the project's own numeric reader:
    // header + one row per grid point with 8 columns
    std::istringstream lines(a);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "sweep_value,mean_capacity_bps_hz,ci_low,ci_high,mean_inv_condition,"
                  "siso_mean_bps_hz,k_per_m,snr_db_or_power_mode");
    int rows = 0;
    while (std::getline(lines, line))
    {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(rows == 3);
}

TEST_CASE("sweep: missing spectrum file exits 2 and leaves no output")
{
    const fs::path dir = scratch_dir() / "missing-spectrum";
    fs::create_directories(dir);
    const fs::path cfg = dir / "bad.json";
    {
        std::ofstream c(cfg);
        std::string json = sweep_config_json("bad-out.csv");
        const auto pos = json.find("/synthetic/h2o.csv");
        REQUIRE(pos != std::string::npos);
        json.replace(pos, std::string("/synthetic/h2o.csv").size(), "/synthetic/nonexistent.csv");
        c << json;
    }
    const std::string cmd = "sh -c 'cd \"" + dir.string() + "\" && \"" + tool +
                            "\" sweep bad.json' > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    CHECK(!fs::exists(dir / "bad-out.csv"));
}

TEST_CASE("sweep: grid outside spectrum coverage exits 3")
{
    const fs::path dir = scratch_dir() / "uncovered";
    fs::create_directories(dir);
    const fs::path cfg = dir / "wide.json";
    {
        std::ofstream c(cfg);
        std::string json = sweep_config_json("wide-out.csv");
        const auto pos = json.find("[55e9, 60e9, 65e9]");
        REQUIRE(pos != std::string::npos);
        json.replace(pos, std::string("[55e9, 60e9, 65e9]").size(), "[55e9, 60e9, 300e9]");
        c << json;
    }
    const std::string cmd = "sh -c 'cd \"" + dir.string() + "\" && \"" + tool +
                            "\" sweep wide.json' > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 3);
    CHECK(!fs::exists(dir / "wide-out.csv"));
}

TEST_CASE("validate: parses config and data without running")
{
    const fs::path dir = scratch_dir();
    const fs::path cfg = dir / "validate.json";
    {
        std::ofstream c(cfg);
        c << sweep_config_json("unused.csv");
    }
    const auto result = run_tool("validate \"" + cfg.string() + "\"");
    CHECK(result.exit_code == 0);
    CHECK(!fs::exists(dir / "unused.csv"));
    CHECK(run_tool("validate /nonexistent/config.json").exit_code == 2);
}

TEST_CASE("sweep: json-lines output format")
{
    const fs::path dir = scratch_dir() / "jsonl";
    fs::create_directories(dir);
    const fs::path cfg = dir / "sweep.json";
    {
        std::ofstream c(cfg);
        std::string json = sweep_config_json("out.jsonl", 40);
        const auto pos = json.find("\"output_format\": \"csv\"");
        REQUIRE(pos != std::string::npos);
        json.replace(pos, std::string("\"output_format\": \"csv\"").size(),
                     "\"output_format\": \"json\"");
        c << json;
    }
    const std::string cmd = "sh -c 'cd \"" + dir.string() + "\" && \"" + tool +
                            "\" sweep sweep.json' > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::istringstream lines(slurp(dir / "out.jsonl"));
    std::string line;
    int rows = 0;
    while (std::getline(lines, line))
    {
        const auto doc = nlohmann::json::parse(line);
        CHECK(doc.contains("mean_capacity_bps_hz"));
        CHECK(doc.contains("k_per_m"));
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("error kinds map to disjoint exit-code classes")
{
    using mmwave::Error;
    using mmwave::ErrorKind;
    CHECK(Error(ErrorKind::Parse, "x").exit_code() == 2);
    CHECK(Error(ErrorKind::Ordering, "x").exit_code() == 2);
    CHECK(Error(ErrorKind::Domain, "x").exit_code() == 2);
    CHECK(Error(ErrorKind::Lookup, "x").exit_code() == 2);
    CHECK(Error(ErrorKind::Consistency, "x").exit_code() == 2);
    CHECK(Error(ErrorKind::Shape, "x").exit_code() == 2);
    CHECK(Error(ErrorKind::Config, "x").exit_code() == 2);
    CHECK(Error(ErrorKind::Range, "x").exit_code() == 3);
    CHECK(Error(ErrorKind::Numerical, "x").exit_code() == 4);
}

TEST_CASE("format_double: shortest round-trip representation")
{
    CHECK(mmwave::format_double(0.5) == "0.5");
    CHECK(mmwave::format_double(1e10) == "1e+10");
    const double v = 6.6582114827517955;
    CHECK(std::stod(mmwave::format_double(v)) == v);
}
