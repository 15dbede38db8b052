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

#include "orthant/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "orthant/constants.hpp"
#include "orthant/errors.hpp"
#include "orthant/geometry.hpp"

namespace orthant {

namespace {

void require(bool ok, const char *message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

// Squared 3D separation; cheaper than link_geometry for the d_min scan.
double squared_distance(const Position3D &a, const Position3D &b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

} // namespace

void validate_config(const ScenarioConfig &config) {
    require(config.pairs >= 1, "pairs: must be at least 1");
    require(config.trials >= 1, "trials: must be at least 1");
    require(config.dipoles >= 1 && config.dipoles <= 3, "dipoles: must be 1, 2, or 3");
    require(std::isfinite(config.area_half_width) && config.area_half_width > 0.0,
            "area_half_width: must be positive");
    require(std::isfinite(config.air_height) && config.air_height >= 0.0,
            "air_height: must be non-negative");
    require(config.air_rx_percentage >= 0.0 && config.air_rx_percentage <= 100.0,
            "air_rx_percentage: must be in [0, 100]");
    require(config.air_tx_percentage >= 0.0 && config.air_tx_percentage <= 100.0,
            "air_tx_percentage: must be in [0, 100]");
    require(config.radio.tx_power > 0.0, "tx_power: must be positive");
    require(config.radio.carrier_frequency > 0.0, "carrier_frequency: must be positive");
    require(config.radio.bandwidth > 0.0, "bandwidth: must be positive");
    require(config.radio.noise_power > 0.0, "noise_power: must be positive");
    require(config.radio.rx_gain > 0.0, "rx_gain: must be positive");
    require(config.dipole_params.carrier_frequency > 0.0,
            "dipole carrier_frequency: must be positive");
    require(config.dipole_params.dipole_length > 0.0, "dipole_length: must be positive");
}

std::size_t aerial_count(std::size_t pairs, double percentage) {
    const auto n = static_cast<std::size_t>(
        std::llround(static_cast<double>(pairs) * percentage / 100.0));
    return std::min(n, pairs);
}

TrialStreams TrialStreams::derive(std::uint64_t master_seed, std::uint64_t trial_index) {
    return TrialStreams{
        RandomStream::derive(master_seed, StreamLabel::Topology, trial_index),
        RandomStream::derive(master_seed, StreamLabel::Assignment, trial_index),
        RandomStream::derive(master_seed, StreamLabel::Fading, trial_index),
    };
}

NetworkRealization generate_topology(const ScenarioConfig &config, TrialStreams &streams) {
    const std::size_t pairs = config.pairs;
    const double w = config.area_half_width;

    NetworkRealization network;
    network.tx_positions.resize(pairs);
    network.rx_positions.resize(pairs);
    network.tx_is_aerial.assign(pairs, false);
    network.rx_is_aerial.assign(pairs, false);
    network.fading_flat.assign(pairs * pairs, std::complex<double>(1.0, 0.0));

    // Frozen draw order: all transmitter coordinates, then all receiver
    // coordinates, from the topology stream.
    for (std::size_t i = 0; i < pairs; ++i) {
        network.tx_positions[i].x = streams.topology.uniform(-w, w);
        network.tx_positions[i].y = streams.topology.uniform(-w, w);
    }
    for (std::size_t i = 0; i < pairs; ++i) {
        network.rx_positions[i].x = streams.topology.uniform(-w, w);
        network.rx_positions[i].y = streams.topology.uniform(-w, w);
    }

    // Aerial roles: first n indices of a seeded permutation, receivers
    // before transmitters on the assignment stream.
    const std::size_t aerial_rx = aerial_count(pairs, config.air_rx_percentage);
    const std::vector<std::size_t> rx_perm = random_permutation(pairs, streams.assignment);
    for (std::size_t k = 0; k < aerial_rx; ++k) {
        network.rx_is_aerial[rx_perm[k]] = true;
    }
    const std::size_t aerial_tx = aerial_count(pairs, config.air_tx_percentage);
    const std::vector<std::size_t> tx_perm = random_permutation(pairs, streams.assignment);
    for (std::size_t k = 0; k < aerial_tx; ++k) {
        network.tx_is_aerial[tx_perm[k]] = true;
    }

    for (std::size_t i = 0; i < pairs; ++i) {
        network.tx_positions[i].z = network.tx_is_aerial[i] ? config.air_height : 0.0;
        network.rx_positions[i].z = network.rx_is_aerial[i] ? config.air_height : 0.0;
    }

    // Resample any receiver inside the minimum link distance of any
    // transmitter, so the pathloss guard can never fire downstream.
    const double min_sq = kMinLinkDistance * kMinLinkDistance;
    for (std::size_t j = 0; j < pairs; ++j) {
        bool clear = false;
        while (!clear) {
            clear = true;
            for (std::size_t i = 0; i < pairs; ++i) {
                if (squared_distance(network.tx_positions[i], network.rx_positions[j]) < min_sq) {
                    network.rx_positions[j].x = streams.topology.uniform(-w, w);
                    network.rx_positions[j].y = streams.topology.uniform(-w, w);
                    clear = false;
                    break;
                }
            }
        }
    }

    if (config.fading_enabled) {
        for (std::size_t i = 0; i < pairs; ++i) {
            for (std::size_t j = 0; j < pairs; ++j) {
                network.fading(i, j) = draw_fading(streams.fading);
            }
        }
    }
    return network;
}

MetricsRecord run_trial(const ScenarioConfig &config, std::uint64_t trial_index) {
    const std::uint64_t placement_trial = config.fixed_topology ? 0 : trial_index;
    TrialStreams streams{
        RandomStream::derive(config.seed, StreamLabel::Topology, placement_trial),
        RandomStream::derive(config.seed, StreamLabel::Assignment, placement_trial),
        RandomStream::derive(config.seed, StreamLabel::Fading, trial_index),
    };
    const NetworkRealization network = generate_topology(config, streams);
    const CandidateSet candidates = candidate_set_for_dipoles(config.dipoles);
    const SelectionResult selection =
        select_all(network, config.strategy, candidates, config.radio, config.dipole_params);
    return compute_metrics(network, selection, config.radio, config.dipole_params);
}

std::vector<MetricsRecord> run_trials(const ScenarioConfig &config, unsigned workers) {
    validate_config(config);

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::size_t trials = config.trials;
    std::vector<MetricsRecord> results(trials);

    const auto worker_count = static_cast<std::size_t>(workers);
    if (worker_count <= 1 || trials == 1) {
        for (std::size_t t = 0; t < trials; ++t) {
            results[t] = run_trial(config, t);
        }
        return results;
    }

    // Each trial is written to its own slot, so the partition shape cannot
    // change the output; chunks only balance the load.
    const std::size_t used = std::min(worker_count, trials);
    const std::size_t chunk = (trials + used - 1) / used;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(used);
    threads.reserve(used);
    for (std::size_t worker = 0; worker < used; ++worker) {
        const std::size_t begin = worker * chunk;
        const std::size_t end = std::min(trials, begin + chunk);
        threads.emplace_back([&, begin, end, worker]() {
            try {
                for (std::size_t t = begin; t < end; ++t) {
                    results[t] = run_trial(config, t);
                }
            } catch (...) {
                errors[worker] = std::current_exception();
            }
        });
    }
    for (std::thread &thread : threads) {
        thread.join();
    }
    for (const std::exception_ptr &error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    return results;
}

std::vector<SchemeSpec> default_schemes() {
    return {
        SchemeSpec{"dipole1_fixed", 1, Strategy::Fixed},
        SchemeSpec{"dipole2_max_power", 2, Strategy::MaxPower},
        SchemeSpec{"dipole3_max_power", 3, Strategy::MaxPower},
        SchemeSpec{"dipole3_max_slnr", 3, Strategy::MaxSlnr},
    };
}

namespace {

// Shared sweep loop: scheme-major, x within scheme. Every cell reuses the
// base seed, so trials are common random numbers across the whole table and
// cell-to-cell differences are paired.
template <typename ApplyX>
SweepTable sweep_impl(const ScenarioConfig &base, const std::vector<double> &xs,
                      const std::vector<SchemeSpec> &schemes, unsigned workers, ApplyX apply_x) {
    SweepTable table;
    table.reserve(schemes.size() * xs.size());
    for (const SchemeSpec &scheme : schemes) {
        for (double x : xs) {
            ScenarioConfig config = base;
            config.dipoles = scheme.dipoles;
            config.strategy = scheme.strategy;
            apply_x(config, x);
            const std::vector<MetricsRecord> records = run_trials(config, workers);
            SweepCell cell;
            cell.scheme = scheme;
            cell.x = x;
            cell.all = aggregate(records, ReceiverFilter::All);
            cell.aerial = aggregate(records, ReceiverFilter::AerialOnly);
            cell.trials = records.size();
            cell.seed = config.seed;
            table.push_back(std::move(cell));
        }
    }
    return table;
}

} // namespace

SweepTable sweep_air_percentage(const ScenarioConfig &base, const std::vector<double> &percentages,
                                const std::vector<SchemeSpec> &schemes, unsigned workers) {
    ScenarioConfig config = base;
    config.air_tx_percentage = 0.0; // ground transmitters in this experiment
    return sweep_impl(config, percentages, schemes, workers,
                      [](ScenarioConfig &c, double x) { c.air_rx_percentage = x; });
}

SweepTable sweep_height(const ScenarioConfig &base, const std::vector<double> &heights,
                        const std::vector<SchemeSpec> &schemes, unsigned workers) {
    return sweep_impl(base, heights, schemes, workers,
                      [](ScenarioConfig &c, double x) { c.air_height = x; });
}

SweepTable sweep_air_tx(const ScenarioConfig &base, const std::vector<double> &percentages,
                        const std::vector<SchemeSpec> &schemes, unsigned workers) {
    return sweep_impl(base, percentages, schemes, workers,
                      [](ScenarioConfig &c, double x) { c.air_rx_percentage = x; });
}

} // namespace orthant
