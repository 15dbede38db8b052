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

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthant/version.hpp"
#include "run_spec.hpp"

namespace {

using namespace orthant;
using namespace orthant::tools;

// Raw flag values before resolution into a ScenarioConfig. Doubles carry
// the user-facing units (dBm, Hz, meters); resolution converts once.
struct FlagValues {
    std::size_t pairs = 4;
    double area_half_width = 100.0;
    double air_height = 150.0;
    double air_rx_percentage = 0.0;
    double air_tx_percentage = 0.0;
    int dipoles = 1;
    std::string strategy; // empty = derived from dipoles
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    double tx_power_dbm = 23.0;
    double carrier_frequency_hz = 800.0e6;
    double bandwidth_hz = 200.0e3;
    double rx_gain = 1.0;
    double dipole_length_m = 0.0; // 0 = half wave at the carrier
    bool no_fading = false;
    bool fixed_topology = false;
    unsigned workers = 0;
    std::string out_dir = "out";
    std::vector<double> points;
    std::uint64_t trial_index = 0;

    bool dipoles_given = false;
    bool strategy_given = false;
};

// Registers the shared experiment flags on a (sub)command. Every value has
// a built-in default, so the resolved config is total no matter which flags
// appear.
void add_scenario_flags(CLI::App *cmd, FlagValues &flags) {
    cmd->add_option("--pairs", flags.pairs, "Transmitter-receiver pair count K");
    cmd->add_option("--area-half-width", flags.area_half_width,
                    "Half width of the placement square, meters");
    cmd->add_option("--air-height", flags.air_height, "Altitude of aerial devices, meters");
    cmd->add_option("--air-rx-percentage", flags.air_rx_percentage,
                    "Percentage of receivers placed at altitude, 0..100");
    cmd->add_option("--air-tx-percentage", flags.air_tx_percentage,
                    "Percentage of transmitters placed at altitude, 0..100");
    cmd->add_option("--dipoles", flags.dipoles, "Dipoles per transmitter: 1, 2, or 3")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--strategy", flags.strategy,
                    "Antenna selection rule: fixed | max_power | max_slnr");
    cmd->add_option("--trials", flags.trials, "Monte Carlo trials per sweep point");
    cmd->add_option("--seed", flags.seed, "Master seed for all random streams");
    cmd->add_option("--tx-power-dbm", flags.tx_power_dbm, "Transmit power, dBm");
    cmd->add_option("--carrier-frequency-hz", flags.carrier_frequency_hz, "Carrier, Hz");
    cmd->add_option("--bandwidth-hz", flags.bandwidth_hz,
                    "Bandwidth, Hz (sets the thermal noise floor)");
    cmd->add_option("--rx-gain", flags.rx_gain, "Receiver gain, linear");
    cmd->add_option("--dipole-length-m", flags.dipole_length_m,
                    "Dipole length, meters (default: half wave at the carrier)");
    cmd->add_flag("--no-fading", flags.no_fading, "Disable Rayleigh fading (pure LoS)");
    cmd->add_flag("--fixed-topology", flags.fixed_topology,
                  "Hold device placement fixed across trials");
    cmd->add_option("--workers", flags.workers,
                    "Worker threads (0 = one per hardware thread)");
    cmd->add_option("--out-dir", flags.out_dir, "Output directory");
}

ScenarioConfig resolve_config(const FlagValues &flags) {
    ScenarioConfig config;
    config.pairs = flags.pairs;
    config.area_half_width = flags.area_half_width;
    config.air_height = flags.air_height;
    config.air_rx_percentage = flags.air_rx_percentage;
    config.air_tx_percentage = flags.air_tx_percentage;
    config.dipoles = flags.dipoles;
    if (flags.strategy_given) {
        const auto strategy = parse_strategy(flags.strategy);
        if (!strategy) {
            throw std::invalid_argument("strategy: unknown tag '" + flags.strategy + "'");
        }
        config.strategy = *strategy;
    } else {
        // A single fixed dipole points up; with more hardware the natural
        // default is the power-maximizing rule.
        config.strategy = flags.dipoles == 1 ? Strategy::Fixed : Strategy::MaxPower;
    }
    config.trials = flags.trials;
    config.seed = flags.seed;
    config.radio.tx_power = dbm_to_watt(flags.tx_power_dbm);
    config.radio.carrier_frequency = flags.carrier_frequency_hz;
    config.radio.bandwidth = flags.bandwidth_hz;
    config.radio.noise_power = noise_power_watt(flags.bandwidth_hz);
    config.radio.rx_gain = flags.rx_gain;
    config.dipole_params = flags.dipole_length_m > 0.0
                               ? DipoleParams{flags.carrier_frequency_hz, flags.dipole_length_m}
                               : DipoleParams::half_wave(flags.carrier_frequency_hz);
    config.fading_enabled = !flags.no_fading;
    config.fixed_topology = flags.fixed_topology;
    return config;
}

std::vector<SchemeSpec> resolve_schemes(const FlagValues &flags, const ScenarioConfig &config) {
    if (flags.dipoles_given || flags.strategy_given) {
        const std::string name = "dipole" + std::to_string(config.dipoles) + "_" +
                                 std::string(to_string(config.strategy));
        return {SchemeSpec{name, config.dipoles, config.strategy}};
    }
    return default_schemes();
}

int execute(const RunSpec &spec) {
    const std::string started_at = utc_timestamp();
    if (spec.command == "sweep") {
        const std::vector<std::string> outputs = run_sweep(spec);
        write_manifest(spec, outputs, started_at);
        for (const std::string &name : outputs) {
            std::cout << (std::filesystem::path(spec.out_dir) / name).string() << "\n";
        }
        return 0;
    }
    if (spec.command == "pattern") {
        const std::vector<std::string> outputs = run_pattern(spec);
        write_manifest(spec, outputs, started_at);
        for (const std::string &name : outputs) {
            std::cout << (std::filesystem::path(spec.out_dir) / name).string() << "\n";
        }
        return 0;
    }
    if (spec.command == "single") {
        run_single(spec, std::cout);
        return 0;
    }
    throw std::invalid_argument("command: unknown '" + spec.command + "'");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"orthant: Monte Carlo interference simulator for 3D IoT networks"};
    app.set_version_flag("--version", std::string(orthant::version()));
    app.set_config("--config", "", "Read options from an INI-style config file");
    app.fallthrough();
    app.require_subcommand(1);

    FlagValues flags;

    CLI::App *sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep and write CSV tables");
    sweep->fallthrough();
    sweep->require_subcommand(1);
    add_scenario_flags(sweep, flags);
    sweep->add_option("--points", flags.points, "Explicit sweep grid values");
    CLI::App *sweep_air = sweep->add_subcommand(
        "air-percentage", "Sweep the aerial-receiver percentage (ground transmitters)");
    CLI::App *sweep_height =
        sweep->add_subcommand("height", "Sweep the aerial-device altitude");
    CLI::App *sweep_air_tx = sweep->add_subcommand(
        "air-tx", "Sweep the aerial-receiver percentage with aerial transmitters");

    CLI::App *pattern =
        app.add_subcommand("pattern", "Export a power-gain grid for one antenna config");
    std::string pattern_tag;
    double azimuth_step = 1.0;
    double polar_step = 1.0;
    pattern->add_option("tag", pattern_tag, "Antenna config: x | y | z | xy | yz | xz")
        ->required();
    pattern->add_option("--azimuth-step", azimuth_step, "Azimuth grid step, degrees");
    pattern->add_option("--polar-step", polar_step, "Polar grid step, degrees");
    add_scenario_flags(pattern, flags);

    CLI::App *single =
        app.add_subcommand("single", "Print one realized trial as structured text");
    add_scenario_flags(single, flags);
    single->add_option("--trial", flags.trial_index, "Trial index to realize");

    CLI::App *rerun =
        app.add_subcommand("rerun", "Re-execute a recorded run from its manifest");
    std::string manifest_path;
    std::string rerun_out_dir;
    unsigned rerun_workers = 0;
    bool rerun_workers_given = false;
    rerun->add_option("manifest", manifest_path, "Path to a manifest.json")->required();
    rerun->add_option("--out-dir", rerun_out_dir,
                      "Write outputs here instead of the manifest's directory");
    rerun->add_option("--workers", rerun_workers, "Override the recorded worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &help) {
        return app.exit(help);
    } catch (const CLI::CallForVersion &ver) {
        return app.exit(ver);
    } catch (const CLI::ParseError &error) {
        app.exit(error);
        return 2;
    }

    flags.dipoles_given = sweep->count("--dipoles") > 0 || pattern->count("--dipoles") > 0 ||
                          single->count("--dipoles") > 0;
    flags.strategy_given = sweep->count("--strategy") > 0 || pattern->count("--strategy") > 0 ||
                           single->count("--strategy") > 0;
    rerun_workers_given = rerun->count("--workers") > 0;

    try {
        RunSpec spec;
        if (rerun->parsed()) {
            spec = load_manifest(manifest_path);
            spec.out_dir = rerun_out_dir.empty()
                               ? std::filesystem::path(manifest_path).parent_path().string()
                               : rerun_out_dir;
            if (spec.out_dir.empty()) {
                spec.out_dir = ".";
            }
            if (rerun_workers_given) {
                spec.workers = rerun_workers;
            }
            return execute(spec);
        }

        spec.config = resolve_config(flags);
        spec.workers = flags.workers;
        spec.out_dir = flags.out_dir;
        if (sweep->parsed()) {
            spec.command = "sweep";
            if (sweep_air->parsed()) {
                spec.sweep_kind = "air-percentage";
            } else if (sweep_height->parsed()) {
                spec.sweep_kind = "height";
            } else if (sweep_air_tx->parsed()) {
                spec.sweep_kind = "air-tx";
            }
            spec.points = flags.points.empty() ? default_points(spec.sweep_kind) : flags.points;
            spec.schemes = resolve_schemes(flags, spec.config);
            if (spec.sweep_kind == "height" && sweep->count("--air-rx-percentage") == 0) {
                // The altitude experiment is about aerial receivers; an
                // all-ground default would produce empty populations.
                spec.config.air_rx_percentage = 50.0;
            }
            return execute(spec);
        }
        if (pattern->parsed()) {
            spec.command = "pattern";
            spec.pattern_tag = pattern_tag;
            spec.azimuth_step_deg = azimuth_step;
            spec.polar_step_deg = polar_step;
            return execute(spec);
        }
        spec.command = "single";
        spec.trial_index = flags.trial_index;
        return execute(spec);
    } catch (const std::invalid_argument &error) {
        std::cerr << "invalid configuration: " << error.what() << "\n";
        return 2;
    } catch (const std::exception &error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}
