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

#ifndef ORTHANT_ANTENNA_HPP
#define ORTHANT_ANTENNA_HPP

#include <complex>
#include <optional>
#include <string_view>
#include <utility>

namespace orthant {

// World axis a dipole is mounted along. All dipoles are axis-aligned; device
// tilt is not modeled.
enum class Axis { X, Y, Z };

// The six selectable antenna configurations: a single dipole along one world
// axis, or two orthogonal dipoles driven simultaneously with equal power
// split and 90 degree phase offset.
enum class AntennaConfig { X, Y, Z, XY, YZ, XZ };

inline constexpr AntennaConfig kAllAntennaConfigs[] = {
    AntennaConfig::X,  AntennaConfig::Y,  AntennaConfig::Z,
    AntennaConfig::XY, AntennaConfig::YZ, AntennaConfig::XZ,
};

struct DipoleParams {
    double carrier_frequency; // Hz
    double dipole_length;     // m

    // Half-wave element for the given carrier: length = c / (2 f0). Under
    // this length the element pattern reduces to the textbook
    // cos((pi/2) cos(theta)) / sin(theta) with unit broadside amplitude.
    static DipoleParams half_wave(double carrier_frequency_hz);
};

// Field amplitude of a z-axis dipole at the given polar (zenith) angle.
// Removable singularities at polar in {0, pi} evaluate to the analytic
// limit; the pattern is azimuth-independent.
double field_z(double polar, const DipoleParams &params);

// Field amplitude of a dipole mounted along an arbitrary world axis. The
// element pattern depends only on the angle between the departure direction
// and the dipole axis.
double field_axis(Axis axis, double azimuth, double polar, const DipoleParams &params);

// Complex field amplitude of a full configuration. Single-dipole configs are
// real; cross-dipole configs combine the two arms as (F_a + j F_b) / sqrt(2),
// which conserves the total radiated power.
std::complex<double> field_config(AntennaConfig config, double azimuth, double polar,
                                  const DipoleParams &params);

// Linear power gain |field_config|^2. For a cross-dipole this equals the
// arithmetic mean of the two single-dipole power gains.
double power_gain(AntennaConfig config, double azimuth, double polar, const DipoleParams &params);

constexpr bool is_cross_dipole(AntennaConfig config) {
    return config == AntennaConfig::XY || config == AntennaConfig::YZ ||
           config == AntennaConfig::XZ;
}

// Axis of a single-dipole config (precondition: !is_cross_dipole).
Axis single_axis(AntennaConfig config);

// The two arms of a cross-dipole config, in feed order: the first is the
// in-phase arm, the second the quadrature arm.
std::pair<Axis, Axis> cross_axes(AntennaConfig config);

std::string_view to_string(AntennaConfig config);
std::optional<AntennaConfig> parse_antenna_config(std::string_view tag);

} // namespace orthant

#endif
