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

#ifndef ORTHANT_SELECTION_HPP
#define ORTHANT_SELECTION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "orthant/antenna.hpp"
#include "orthant/channel.hpp"
#include "orthant/network.hpp"

namespace orthant {

// Transmitter-side selection strategies. SINR-maximizing selection is
// deliberately absent: a transmitter cannot evaluate it without knowing the
// other transmitters' simultaneous decisions.
enum class Strategy { Fixed, MaxPower, MaxSlnr };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view tag);

// Ordered candidate configurations. Order matters: argmax ties break to the
// earliest maximal element, so the order is part of the reproducibility
// contract.
struct CandidateSet {
    std::vector<AntennaConfig> configs;
};

// The three supported hardware levels:
//   1 dipole  -> {Z}
//   2 dipoles -> {Y, Z} (two orthogonal elements, y- and z-axis)
//   3 dipoles -> {X, Y, Z, XY, YZ, XZ}
// Throws InvalidCandidateSet for any other count.
CandidateSet candidate_set_for_dipoles(int dipoles);

struct SelectionResult {
    std::vector<AntennaConfig> per_transmitter_config;
    // Criterion value re-evaluated at the chosen config: received signal
    // power in watts for MaxPower, a dimensionless ratio for MaxSlnr,
    // desired |h|^2 in watts for Fixed.
    std::vector<double> per_transmitter_score;
};

// Fixed policy: the candidate set must be exactly {Z}; returns Z.
AntennaConfig select_fixed(const CandidateSet &candidates);

// Method 1: argmax over candidates of the received signal power on the
// transmitter's own link, |h_{i,i}(c)|^2. Interference plays no role.
AntennaConfig select_max_power(std::size_t tx_index, const NetworkRealization &network,
                               const CandidateSet &candidates, const RadioParams &radio,
                               const DipoleParams &dipole);

// Method 2: argmax over candidates of the signal-to-leakage-and-noise ratio
//
//   |h_{i,i}(c)|^2 / (sum_{j != i} |h_{i,j}(c)|^2 + noise_power)
//
// where the leakage sum runs over transmitter i's links to the OTHER
// receivers (row i of the channel matrix). This is measurable at the
// transmitter alone, unlike SINR whose interference sum depends on other
// transmitters' choices.
AntennaConfig select_max_slnr(std::size_t tx_index, const NetworkRealization &network,
                              const CandidateSet &candidates, const RadioParams &radio,
                              const DipoleParams &dipole);

// Applies the per-transmitter rule independently to each of the K
// transmitters; selections are decoupled, no joint optimization.
SelectionResult select_all(const NetworkRealization &network, Strategy strategy,
                           const CandidateSet &candidates, const RadioParams &radio,
                           const DipoleParams &dipole);

} // namespace orthant

#endif
