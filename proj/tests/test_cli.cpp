// SPDX-License-Identifier: Apache-2.0
//
// orthant: interference simulator for 3D IoT networks with dipole antenna selection
// Copyright (C) 2026 orthant contributors
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
//
// End-to-end checks of the command line tool. Each case shells out to the
// built binary (path injected by the build as ORTHANT_CLI_BIN) inside a
// scratch directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_root() {
    static const fs::path root = [] {
        fs::path p = fs::temp_directory_path() / "orthant_cli_tests";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return root;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string &args) {
    static int invocation = 0;
    const fs::path out_file = scratch_root() / ("stdout." + std::to_string(invocation));
    const fs::path err_file = scratch_root() / ("stderr." + std::to_string(invocation));
    ++invocation;
    const std::string command = std::string(ORTHANT_CLI_BIN) + " " + args + " > " +
                                out_file.string() + " 2> " + err_file.string();
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

// Parses a sweep or pattern CSV into rows of doubles (header skipped).
std::vector<std::vector<double>> parse_csv(const fs::path &path) {
    const std::vector<std::string> lines = lines_of(slurp(path));
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<double> row;
        std::istringstream in(lines[i]);
        std::string cell;
        while (std::getline(in, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t count_occurrences(const std::string &text, const std::string &needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("sweep writes the documented table shape") {
    const fs::path dir = scratch_root() / "shape";
    const CliResult result = run_cli(
        "sweep air-percentage --dipoles 3 --strategy max_slnr --trials 5 --seed 7 --out-dir " +
        dir.string());
    REQUIRE(result.exit_code == 0);

    const fs::path csv = dir / "air_percentage_dipole3_max_slnr.csv";
    REQUIRE(fs::exists(csv));
    REQUIRE(fs::exists(dir / "manifest.json"));

    const std::string content = slurp(csv);
    CHECK(content.find('\r') == std::string::npos);
    const std::vector<std::string> lines = lines_of(content);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "sweep_variable,mean_sum_rate_bps_hz,stderr,mean_desired_dbm,"
                      "mean_interference_dbm,mean_sir_db,trials,seed");
    const std::vector<std::vector<double>> rows = parse_csv(csv);
    const std::vector<double> expected_x{0.0, 25.0, 50.0, 75.0, 100.0};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i][0] == expected_x[i]);
        CHECK(rows[i][6] == 5.0);
        CHECK(rows[i][7] == 7.0);
    }
}

TEST_CASE("default scheme set produces one csv per scheme") {
    const fs::path dir = scratch_root() / "schemes";
    const CliResult result =
        run_cli("sweep air-percentage --trials 3 --points 50 --out-dir " + dir.string());
    REQUIRE(result.exit_code == 0);
    CHECK(fs::exists(dir / "air_percentage_dipole1_fixed.csv"));
    CHECK(fs::exists(dir / "air_percentage_dipole2_max_power.csv"));
    CHECK(fs::exists(dir / "air_percentage_dipole3_max_power.csv"));
    CHECK(fs::exists(dir / "air_percentage_dipole3_max_slnr.csv"));
}

TEST_CASE("invalid configuration exits 2 and names the field") {
    const CliResult result = run_cli("sweep air-percentage --air-rx-percentage 120 --trials 3");
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("air_rx_percentage") != std::string::npos);
    CHECK(result.err.find("[0, 100]") != std::string::npos);

    const CliResult bad_tag = run_cli("pattern w");
    CHECK(bad_tag.exit_code == 2);
    CHECK(bad_tag.err.find("'w'") != std::string::npos);
}

TEST_CASE("pattern grids carry the documented symmetries") {
    const fs::path dir = scratch_root() / "pattern";
    const std::string grid = " --azimuth-step 45 --polar-step 30 --out-dir " + dir.string();
    REQUIRE(run_cli("pattern z" + grid).exit_code == 0);
    REQUIRE(run_cli("pattern x" + grid).exit_code == 0);
    REQUIRE(run_cli("pattern y" + grid).exit_code == 0);
    REQUIRE(run_cli("pattern xy" + grid).exit_code == 0);

    const auto z = parse_csv(dir / "pattern_z.csv");
    const auto x = parse_csv(dir / "pattern_x.csv");
    const auto y = parse_csv(dir / "pattern_y.csv");
    const auto xy = parse_csv(dir / "pattern_xy.csv");
    REQUIRE(z.size() == 7 * 8); // polar 0..180 x azimuth -180..135
    REQUIRE(x.size() == z.size());

    for (std::size_t i = 0; i < z.size(); ++i) {
        // Vertical dipole is azimuth-symmetric: within a polar ring the gain
        // is constant.
        if (i > 0 && z[i][1] == z[i - 1][1]) {
            CHECK(z[i][2] == z[i - 1][2]);
        }
        // Broadside ring of the half-wave vertical dipole has unit gain.
        if (z[i][1] == 90.0) {
            CHECK(z[i][2] == 1.0);
        }
        // The two-arm config splits power evenly between its arms.
        CHECK(xy[i][2] == doctest::Approx((x[i][2] + y[i][2]) / 2.0).epsilon(1e-9));
    }
}

TEST_CASE("single realization is deterministic and honors the flags") {
    const std::string args = "single --pairs 4 --air-rx-percentage 50 --seed 11 --dipoles 3";
    const CliResult first = run_cli(args);
    const CliResult again = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == again.out);
    // 50% of 4 receivers fly at the default 150 m.
    CHECK(count_occurrences(first.out, "z=150 aerial=1") == 2);

    const CliResult fixed = run_cli("single --pairs 3 --seed 11 --strategy fixed");
    REQUIRE(fixed.exit_code == 0);
    CHECK(count_occurrences(fixed.out, ": z score=") == 3);

    // The realized network depends only on the seed streams, never on the
    // hardware under comparison.
    const CliResult two = run_cli("single --pairs 4 --air-rx-percentage 50 --seed 11 --dipoles 2");
    auto device_lines = [](const std::string &text) {
        std::string kept;
        for (const std::string &line : lines_of(text)) {
            if (line.rfind("tx[", 0) == 0 || line.rfind("rx[", 0) == 0) {
                kept += line;
                kept += '\n';
            }
        }
        return kept;
    };
    CHECK(device_lines(first.out) == device_lines(two.out));
}

TEST_CASE("reruns from the manifest reproduce every csv byte for byte") {
    const fs::path dir = scratch_root() / "rerun_src";
    const fs::path copy = scratch_root() / "rerun_dst";
    REQUIRE(run_cli("sweep height --trials 6 --seed 5 --points 50 150 --out-dir " + dir.string())
                .exit_code == 0);
    REQUIRE(run_cli("rerun " + (dir / "manifest.json").string() + " --workers 2 --out-dir " +
                    copy.string())
                .exit_code == 0);
    for (const char *name :
         {"height_dipole1_fixed.csv", "height_dipole2_max_power.csv",
          "height_dipole3_max_power.csv", "height_dipole3_max_slnr.csv"}) {
        CHECK(slurp(dir / name) == slurp(copy / name));
    }
}

TEST_CASE("worker count does not change the csv bytes") {
    const fs::path one = scratch_root() / "workers1";
    const fs::path four = scratch_root() / "workers4";
    const std::string base =
        "sweep air-percentage --trials 8 --seed 13 --points 25 75 --dipoles 2 ";
    REQUIRE(run_cli(base + "--workers 1 --out-dir " + one.string()).exit_code == 0);
    REQUIRE(run_cli(base + "--workers 4 --out-dir " + four.string()).exit_code == 0);
    CHECK(slurp(one / "air_percentage_dipole2_max_power.csv") ==
          slurp(four / "air_percentage_dipole2_max_power.csv"));
}

TEST_CASE("config file values yield to explicit flags") {
    const fs::path dir = scratch_root() / "config";
    fs::create_directories(dir);
    const fs::path ini = dir / "run.ini";
    {
        std::ofstream out(ini);
        out << "[sweep]\ntrials=4\nseed=21\n";
    }
    const std::string base = "sweep air-percentage --config " + ini.string() +
                             " --points 50 --dipoles 1 --out-dir ";
    REQUIRE(run_cli(base + (dir / "from_file").string()).exit_code == 0);
    const auto file_rows = parse_csv(dir / "from_file" / "air_percentage_dipole1_fixed.csv");
    CHECK(file_rows[0][6] == 4.0);  // trials from the file
    CHECK(file_rows[0][7] == 21.0); // seed from the file

    REQUIRE(run_cli(base + (dir / "overridden").string() + " --trials 9").exit_code == 0);
    const auto flag_rows = parse_csv(dir / "overridden" / "air_percentage_dipole1_fixed.csv");
    CHECK(flag_rows[0][6] == 9.0); // flag wins
    CHECK(flag_rows[0][7] == 21.0);
}
