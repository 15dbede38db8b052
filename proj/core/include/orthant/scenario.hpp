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

#ifndef ORTHANT_SCENARIO_HPP
#define ORTHANT_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orthant/antenna.hpp"
#include "orthant/channel.hpp"
#include "orthant/metrics.hpp"
#include "orthant/network.hpp"
#include "orthant/rng.hpp"
#include "orthant/selection.hpp"

namespace orthant {

// Full description of one Monte Carlo experiment arm.
struct ScenarioConfig {
    std::size_t pairs = 4;           // transmitter-receiver pair count K
    double area_half_width = 100.0;  // x, y uniform in [-w, w] meters
    double air_height = 150.0;       // z of aerial devices, meters
    double air_rx_percentage = 0.0;  // 0..100
    double air_tx_percentage = 0.0;  // 0..100
    int dipoles = 1;                 // 1 | 2 | 3, see candidate_set_for_dipoles
    Strategy strategy = Strategy::Fixed;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    RadioParams radio = RadioParams::defaults();
    DipoleParams dipole_params = DipoleParams::half_wave(800.0e6);
    bool fading_enabled = true; // false pins every fade to 1 (pure LoS)

    // When true, positions and aerial roles are realized once (trial 0's
    // substreams) and held across trials; fading still redraws per trial.
    // Default re-realizes everything each trial.
    bool fixed_topology = false;
};

// Throws std::invalid_argument naming the offending field when a value is
// out of contract (percentages outside [0, 100], pairs or trials of 0,
// dipoles outside 1..3, non-positive radio parameters or lengths).
void validate_config(const ScenarioConfig &config);

// Number of aerial devices for a percentage: round(K * pct / 100),
// round-half-away-from-zero.
std::size_t aerial_count(std::size_t pairs, double percentage);

// The per-trial random streams. Each is independently derived from
// (master seed, label, trial index) so adding draws to one stream never
// shifts another, and trials can run in any order on any worker.
struct TrialStreams {
    RandomStream topology;   // device x, y placement
    RandomStream assignment; // which devices are aerial
    RandomStream fading;     // channel coefficients

    static TrialStreams derive(std::uint64_t master_seed, std::uint64_t trial_index);
};

// Realizes one network: x, y i.i.d. uniform in the square (all transmitter
// coordinates drawn first, then all receiver coordinates); aerial roles
// given to the first n indices of a seeded permutation (receivers permuted
// first, then transmitters); z set to air_height or 0 accordingly; receivers
// closer than kMinLinkDistance to any transmitter are resampled in x, y;
// then the K*K fading matrix is drawn row by row (all ones when fading is
// disabled). The draw order is frozen: changing it breaks bit-for-bit
// reproducibility of every seeded result.
NetworkRealization generate_topology(const ScenarioConfig &config, TrialStreams &streams);

// One Monte Carlo sample: generate_topology, select_all under the config's
// strategy and dipole count, compute_metrics. Deterministic in
// (config, trial_index).
MetricsRecord run_trial(const ScenarioConfig &config, std::uint64_t trial_index);

// Runs config.trials trials, optionally across worker threads. Each trial
// writes to its own preallocated slot, so the result is bit-identical for
// any worker count. workers = 0 means one worker per hardware thread.
std::vector<MetricsRecord> run_trials(const ScenarioConfig &config, unsigned workers = 1);

// One experiment arm of a sweep: a named (dipoles, strategy) combination.
struct SchemeSpec {
    std::string name;
    int dipoles = 1;
    Strategy strategy = Strategy::Fixed;
};

// The standard four-arm comparison: 1 dipole fixed, 2 dipoles max power,
// 3 dipoles max power, 3 dipoles max SLNR.
std::vector<SchemeSpec> default_schemes();

// One sweep-table cell: a scheme evaluated at one x-axis value. Both the
// all-receiver and aerial-only aggregates are carried so consumers can pick
// the population that matches their quantity (aerial-receiver signal powers
// vs network-wide sum rate).
struct SweepCell {
    SchemeSpec scheme;
    double x = 0.0;
    AggregateSummary all;
    AggregateSummary aerial;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

using SweepTable = std::vector<SweepCell>;

// Sum rate (and powers) versus aerial-receiver percentage. Every sweep point
// and scheme reuses the same master seed, so per-trial draws are common
// random numbers across cells and paired comparisons are valid.
SweepTable sweep_air_percentage(const ScenarioConfig &base, const std::vector<double> &percentages,
                                const std::vector<SchemeSpec> &schemes, unsigned workers = 1);

// Metrics versus aerial-device height at fixed aerial percentage. The
// aerial-only aggregate is the headline population for the power columns.
SweepTable sweep_height(const ScenarioConfig &base, const std::vector<double> &heights,
                        const std::vector<SchemeSpec> &schemes, unsigned workers = 1);

// Aerial-transmitter variant: identical to sweep_air_percentage but honors
// base.air_tx_percentage (typically 50 or 100) instead of forcing ground
// transmitters.
SweepTable sweep_air_tx(const ScenarioConfig &base, const std::vector<double> &percentages,
                        const std::vector<SchemeSpec> &schemes, unsigned workers = 1);

} // namespace orthant

#endif
