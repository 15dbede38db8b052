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

#ifndef ORTHANT_METRICS_HPP
#define ORTHANT_METRICS_HPP

#include <cstddef>
#include <vector>

#include "orthant/channel.hpp"
#include "orthant/network.hpp"
#include "orthant/selection.hpp"

namespace orthant {

// Per-trial link metrics. All powers in watts, all ratios linear; dB/dBm
// conversion happens in the aggregation and output layers.
//
// With zero interferers (K = 1) sir is +infinity by IEEE division; the
// aggregator's dB statistics are only meaningful for K >= 2.
struct MetricsRecord {
    std::vector<double> per_receiver_sinr;
    std::vector<double> per_receiver_sir;
    std::vector<double> per_receiver_desired_power;      // watts
    std::vector<double> per_receiver_interference_power; // watts
    std::vector<bool> rx_is_aerial; // copied so aggregation can filter
    double sum_rate = 0.0;          // bits/s/Hz
};

// Evaluates every receiver under the realized network and the transmitters'
// chosen configs:
//
//   desired_i      = |h_{i,i}|^2 under transmitter i's config
//   interference_i = sum_{j != i} |h_{j,i}|^2, each term under transmitter
//                    j's config and the j -> i geometry and fading
//   sinr_i         = desired_i / (interference_i + noise_power)
//   sum_rate       = sum_i log2(1 + sinr_i)
//
// Note the asymmetry against the selection module: SLNR selection sums row i
// (transmitter i's leakage OUT), while the SINR here sums column i
// (interference INTO receiver i).
MetricsRecord compute_metrics(const NetworkRealization &network, const SelectionResult &selection,
                              const RadioParams &radio, const DipoleParams &dipole);

// Which receivers contribute to the per-trial power and ratio statistics.
enum class ReceiverFilter { All, AerialOnly, GroundOnly };

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0; // standard error of the mean, n-1 normalization
};

// Monte Carlo summary across trials. Power and ratio fields reduce each
// trial to the mean over its filter-matching receivers, then average across
// trials; dB-domain statistics are computed on the dB-converted per-trial
// values, not by converting the linear mean.
struct AggregateSummary {
    MeanStderr sum_rate; // bits/s/Hz, over all trials

    MeanStderr desired_power_watt;
    MeanStderr desired_power_dbm;
    MeanStderr interference_power_watt;
    MeanStderr interference_power_dbm;
    MeanStderr sir_linear;
    MeanStderr sir_db;

    // Trials with at least one filter-matching receiver; the power and
    // ratio statistics average over exactly these. sum_rate always covers
    // every record.
    std::size_t contributing_trials = 0;
};

// Throws EmptyInput on an empty record list. A single record yields
// stderr 0.
AggregateSummary aggregate(const std::vector<MetricsRecord> &records,
                           ReceiverFilter filter = ReceiverFilter::All);

} // namespace orthant

#endif
