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

#ifndef ORTHANT_GEOMETRY_HPP
#define ORTHANT_GEOMETRY_HPP

#include "orthant/constants.hpp"
#include "orthant/errors.hpp"

namespace orthant {

// Device location in meters. z is altitude above ground, so z >= 0.
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Spherical view of a Tx->Rx displacement:
//   distance  Euclidean separation [m], always >= kMinLinkDistance
//   azimuth   angle of the x-y projection from the +x axis [rad], in [-pi, pi)
//   polar     angle from the +z axis [rad], in [0, pi]
//
// For vertical links the azimuth is undefined and reported as 0.
struct LinkGeometry {
    double distance;
    double azimuth;
    double polar;
};

// Spherical decomposition of rx - tx. Throws CoLocatedDevices when the
// separation is below kMinLinkDistance.
LinkGeometry link_geometry(const Position3D &tx, const Position3D &rx);

} // namespace orthant

#endif
