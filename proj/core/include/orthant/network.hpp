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

#ifndef ORTHANT_NETWORK_HPP
#define ORTHANT_NETWORK_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "orthant/geometry.hpp"

namespace orthant {

// One realized network: K transmitter-receiver pairs with fixed positions,
// aerial role flags, and one block-fading draw per ordered (tx, rx) link.
// Pair i communicates tx i -> rx i; every other (i, j) link is interference.
struct NetworkRealization {
    std::vector<Position3D> tx_positions;
    std::vector<Position3D> rx_positions;
    std::vector<bool> tx_is_aerial;
    std::vector<bool> rx_is_aerial;

    // K*K fading coefficients, row major: fading_flat[i * K + j] is the
    // coefficient on the link from transmitter i to receiver j.
    std::vector<std::complex<double>> fading_flat;

    std::size_t pair_count() const { return tx_positions.size(); }

    std::complex<double> fading(std::size_t tx, std::size_t rx) const {
        return fading_flat[tx * pair_count() + rx];
    }
    std::complex<double> &fading(std::size_t tx, std::size_t rx) {
        return fading_flat[tx * pair_count() + rx];
    }
};

} // namespace orthant

#endif
