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

#include "orthant/metrics.hpp"

#include <cmath>
#include <cstddef>

#include "orthant/errors.hpp"
#include "orthant/geometry.hpp"

namespace orthant {

namespace {

// |h_{tx,rx}|^2 in watts under the transmitter's chosen config.
double link_power(const NetworkRealization &network, std::size_t tx, std::size_t rx,
                  AntennaConfig config, const RadioParams &radio, const DipoleParams &dipole) {
    const LinkGeometry geo = link_geometry(network.tx_positions[tx], network.rx_positions[rx]);
    const double beta = pathloss(geo.distance, radio.carrier_frequency);
    return radio.tx_power * beta * radio.rx_gain * power_gain(config, geo.azimuth, geo.polar, dipole) *
           std::norm(network.fading(tx, rx));
}

// Mean over the filter-matching receivers of one record, or no value when
// none match.
struct TrialScalars {
    bool present = false;
    double desired = 0.0;
    double interference = 0.0;
    double sir = 0.0;
};

TrialScalars reduce_record(const MetricsRecord &record, ReceiverFilter filter) {
    TrialScalars out;
    std::size_t count = 0;
    for (std::size_t i = 0; i < record.per_receiver_desired_power.size(); ++i) {
        const bool aerial = record.rx_is_aerial[i];
        if ((filter == ReceiverFilter::AerialOnly && !aerial) ||
            (filter == ReceiverFilter::GroundOnly && aerial)) {
            continue;
        }
        out.desired += record.per_receiver_desired_power[i];
        out.interference += record.per_receiver_interference_power[i];
        out.sir += record.per_receiver_sir[i];
        ++count;
    }
    if (count > 0) {
        out.present = true;
        out.desired /= static_cast<double>(count);
        out.interference /= static_cast<double>(count);
        out.sir /= static_cast<double>(count);
    }
    return out;
}

// Two-pass mean and standard error with compensated summation. The values
// are materialized in trial order first, so the arithmetic order is fixed
// regardless of how workers scheduled the trials.
MeanStderr mean_stderr(const std::vector<double> &values) {
    MeanStderr out;
    const std::size_t n = values.size();
    if (n == 0) {
        out.mean = std::nan("");
        out.stderr_ = std::nan("");
        return out;
    }
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    out.mean = sum / static_cast<double>(n);
    if (n == 1) {
        out.stderr_ = 0.0;
        return out;
    }
    double sq = 0.0;
    double sq_comp = 0.0;
    for (double v : values) {
        const double d = v - out.mean;
        const double y = d * d - sq_comp;
        const double t = sq + y;
        sq_comp = (t - sq) - y;
        sq = t;
    }
    const double variance = sq / static_cast<double>(n - 1);
    out.stderr_ = std::sqrt(variance / static_cast<double>(n));
    return out;
}

} // namespace

MetricsRecord compute_metrics(const NetworkRealization &network, const SelectionResult &selection,
                              const RadioParams &radio, const DipoleParams &dipole) {
    const std::size_t pairs = network.pair_count();
    MetricsRecord record;
    record.per_receiver_sinr.resize(pairs);
    record.per_receiver_sir.resize(pairs);
    record.per_receiver_desired_power.resize(pairs);
    record.per_receiver_interference_power.resize(pairs);
    record.rx_is_aerial.assign(network.rx_is_aerial.begin(), network.rx_is_aerial.end());

    double sum_rate = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const double desired =
            link_power(network, i, i, selection.per_transmitter_config[i], radio, dipole);
        double interference = 0.0;
        for (std::size_t j = 0; j < pairs; ++j) {
            if (j == i) {
                continue;
            }
            // Interference INTO receiver i: transmitter j's config on the
            // j -> i link (column sum, unlike SLNR's row sum).
            interference +=
                link_power(network, j, i, selection.per_transmitter_config[j], radio, dipole);
        }
        const double sinr = desired / (interference + radio.noise_power);
        record.per_receiver_desired_power[i] = desired;
        record.per_receiver_interference_power[i] = interference;
        record.per_receiver_sinr[i] = sinr;
        record.per_receiver_sir[i] = desired / interference;
        sum_rate += std::log2(1.0 + sinr);
    }
    record.sum_rate = sum_rate;
    return record;
}

AggregateSummary aggregate(const std::vector<MetricsRecord> &records, ReceiverFilter filter) {
    if (records.empty()) {
        throw EmptyInput("aggregate: no records");
    }

    std::vector<double> sum_rates;
    sum_rates.reserve(records.size());
    std::vector<double> desired_w, interference_w, sir_lin;
    std::vector<double> desired_dbm, interference_dbm, sir_db;

    for (const MetricsRecord &record : records) {
        sum_rates.push_back(record.sum_rate);
        const TrialScalars s = reduce_record(record, filter);
        if (!s.present) {
            continue;
        }
        desired_w.push_back(s.desired);
        interference_w.push_back(s.interference);
        sir_lin.push_back(s.sir);
        desired_dbm.push_back(watt_to_dbm(s.desired));
        interference_dbm.push_back(watt_to_dbm(s.interference));
        sir_db.push_back(linear_to_db(s.sir));
    }

    AggregateSummary summary;
    summary.sum_rate = mean_stderr(sum_rates);
    summary.desired_power_watt = mean_stderr(desired_w);
    summary.desired_power_dbm = mean_stderr(desired_dbm);
    summary.interference_power_watt = mean_stderr(interference_w);
    summary.interference_power_dbm = mean_stderr(interference_dbm);
    summary.sir_linear = mean_stderr(sir_lin);
    summary.sir_db = mean_stderr(sir_db);
    summary.contributing_trials = desired_w.size();
    return summary;
}

} // namespace orthant
