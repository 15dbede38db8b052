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

#include "orthant/selection.hpp"

#include <complex>
#include <string>

#include "orthant/errors.hpp"
#include "orthant/geometry.hpp"

namespace orthant {

namespace {

// Pattern-independent part of |h_{i,j}(c)|^2, plus the departure angles the
// pattern needs. Factoring this out evaluates geometry and pathloss once per
// link instead of once per candidate.
struct LinkTerms {
    double constant; // P_tx * beta * G_rx * |alpha|^2, watts
    double azimuth;
    double polar;
};

LinkTerms link_terms(const NetworkRealization &network, std::size_t tx, std::size_t rx,
                     const RadioParams &radio) {
    const LinkGeometry geo = link_geometry(network.tx_positions[tx], network.rx_positions[rx]);
    const double beta = pathloss(geo.distance, radio.carrier_frequency);
    const double constant =
        radio.tx_power * beta * radio.rx_gain * std::norm(network.fading(tx, rx));
    return LinkTerms{constant, geo.azimuth, geo.polar};
}

// First maximal element: a strict > scan, so ties go to the earliest
// candidate. The candidate order is part of the reproducibility contract.
std::size_t argmax_first(const std::vector<double> &scores) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) {
            best = i;
        }
    }
    return best;
}

void require_nonempty(const CandidateSet &candidates) {
    if (candidates.configs.empty()) {
        throw InvalidCandidateSet("candidate set is empty");
    }
}

double max_power_score(std::size_t tx_index, AntennaConfig config,
                       const NetworkRealization &network, const RadioParams &radio,
                       const DipoleParams &dipole) {
    const LinkTerms own = link_terms(network, tx_index, tx_index, radio);
    return own.constant * power_gain(config, own.azimuth, own.polar, dipole);
}

double slnr_score(std::size_t tx_index, AntennaConfig config, const NetworkRealization &network,
                  const RadioParams &radio, const DipoleParams &dipole) {
    const std::size_t pairs = network.pair_count();
    const LinkTerms own = link_terms(network, tx_index, tx_index, radio);
    const double desired = own.constant * power_gain(config, own.azimuth, own.polar, dipole);
    double leakage = 0.0;
    for (std::size_t j = 0; j < pairs; ++j) {
        if (j == tx_index) {
            continue;
        }
        const LinkTerms leak = link_terms(network, tx_index, j, radio);
        leakage += leak.constant * power_gain(config, leak.azimuth, leak.polar, dipole);
    }
    return desired / (leakage + radio.noise_power);
}

} // namespace

std::string_view to_string(Strategy strategy) {
    switch (strategy) {
    case Strategy::Fixed:
        return "fixed";
    case Strategy::MaxPower:
        return "max_power";
    case Strategy::MaxSlnr:
        return "max_slnr";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view tag) {
    if (tag == "fixed") {
        return Strategy::Fixed;
    }
    if (tag == "max_power") {
        return Strategy::MaxPower;
    }
    if (tag == "max_slnr") {
        return Strategy::MaxSlnr;
    }
    return std::nullopt;
}

CandidateSet candidate_set_for_dipoles(int dipoles) {
    switch (dipoles) {
    case 1:
        return CandidateSet{{AntennaConfig::Z}};
    case 2:
        return CandidateSet{{AntennaConfig::Y, AntennaConfig::Z}};
    case 3:
        return CandidateSet{{AntennaConfig::X, AntennaConfig::Y, AntennaConfig::Z,
                             AntennaConfig::XY, AntennaConfig::YZ, AntennaConfig::XZ}};
    default:
        throw InvalidCandidateSet("dipoles must be 1, 2, or 3, got " + std::to_string(dipoles));
    }
}

AntennaConfig select_fixed(const CandidateSet &candidates) {
    if (candidates.configs.size() != 1 || candidates.configs[0] != AntennaConfig::Z) {
        throw InvalidCandidateSet("fixed strategy requires the candidate set {z}");
    }
    return AntennaConfig::Z;
}

AntennaConfig select_max_power(std::size_t tx_index, const NetworkRealization &network,
                               const CandidateSet &candidates, const RadioParams &radio,
                               const DipoleParams &dipole) {
    require_nonempty(candidates);
    std::vector<double> scores;
    scores.reserve(candidates.configs.size());
    for (AntennaConfig config : candidates.configs) {
        scores.push_back(max_power_score(tx_index, config, network, radio, dipole));
    }
    return candidates.configs[argmax_first(scores)];
}

AntennaConfig select_max_slnr(std::size_t tx_index, const NetworkRealization &network,
                              const CandidateSet &candidates, const RadioParams &radio,
                              const DipoleParams &dipole) {
    require_nonempty(candidates);
    std::vector<double> scores;
    scores.reserve(candidates.configs.size());
    for (AntennaConfig config : candidates.configs) {
        scores.push_back(slnr_score(tx_index, config, network, radio, dipole));
    }
    return candidates.configs[argmax_first(scores)];
}

SelectionResult select_all(const NetworkRealization &network, Strategy strategy,
                           const CandidateSet &candidates, const RadioParams &radio,
                           const DipoleParams &dipole) {
    const std::size_t pairs = network.pair_count();
    SelectionResult result;
    result.per_transmitter_config.reserve(pairs);
    result.per_transmitter_score.reserve(pairs);

    for (std::size_t i = 0; i < pairs; ++i) {
        AntennaConfig chosen = AntennaConfig::Z;
        switch (strategy) {
        case Strategy::Fixed:
            chosen = select_fixed(candidates);
            break;
        case Strategy::MaxPower:
            chosen = select_max_power(i, network, candidates, radio, dipole);
            break;
        case Strategy::MaxSlnr:
            chosen = select_max_slnr(i, network, candidates, radio, dipole);
            break;
        }
        // Score is always the criterion re-evaluated at the chosen config;
        // the fixed policy has no criterion, so it reports desired power.
        const double score = strategy == Strategy::MaxSlnr
                                 ? slnr_score(i, chosen, network, radio, dipole)
                                 : max_power_score(i, chosen, network, radio, dipole);
        result.per_transmitter_config.push_back(chosen);
        result.per_transmitter_score.push_back(score);
    }
    return result;
}

} // namespace orthant
