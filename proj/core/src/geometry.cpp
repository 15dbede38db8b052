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

#include "orthant/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace orthant {

LinkGeometry link_geometry(const Position3D &tx, const Position3D &rx) {
    const double dx = rx.x - tx.x;
    const double dy = rx.y - tx.y;
    const double dz = rx.z - tx.z;

    const double distance = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!(distance >= kMinLinkDistance)) {
        throw CoLocatedDevices(distance);
    }

    const double cos_polar = std::clamp(dz / distance, -1.0, 1.0);
    const double polar = std::acos(cos_polar);

    // Vertical links have no defined azimuth; report 0. atan2 yields +pi for
    // directions along -x, which folds to -pi to keep the [-pi, pi) range.
    double azimuth = (dx == 0.0 && dy == 0.0) ? 0.0 : std::atan2(dy, dx);
    if (azimuth == kPi) {
        azimuth = -kPi;
    }

    return LinkGeometry{distance, azimuth, polar};
}

} // namespace orthant
