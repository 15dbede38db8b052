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

#include "orthant/channel.hpp"

#include <cmath>

#include "orthant/constants.hpp"
#include "orthant/errors.hpp"

namespace orthant {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

RadioParams RadioParams::defaults() {
    const double bandwidth = 200.0e3;
    return RadioParams{
        dbm_to_watt(23.0), 800.0e6, bandwidth, noise_power_watt(bandwidth), 1.0,
    };
}

double pathloss(double distance_m, double carrier_frequency_hz) {
    if (!(distance_m >= kMinLinkDistance)) {
        throw CoLocatedDevices(distance_m);
    }
    const double wavelength = kSpeedOfLight / carrier_frequency_hz;
    const double ratio = wavelength / (4.0 * kPi * distance_m);
    return ratio * ratio;
}

double noise_power_watt(double bandwidth_hz) {
    return dbm_to_watt(-174.0 + 10.0 * std::log10(bandwidth_hz));
}

std::complex<double> draw_fading(RandomStream &stream) {
    // Polar form of a circularly-symmetric unit-variance complex Gaussian:
    // |a|^2 = -ln(u1) is exactly Exp(1), the phase is uniform. uniform() can
    // return 0, where -ln(u) would be infinite; the offset by 2^-53 keeps u
    // in (0, 1] without biasing the 53-bit grid.
    const double u1 = stream.uniform() + 0x1.0p-53;
    const double u2 = stream.uniform();
    const double magnitude = std::sqrt(-std::log(u1));
    const double phase = kTwoPi * u2;
    return {magnitude * std::cos(phase), magnitude * std::sin(phase)};
}

std::complex<double> channel_coefficient(const Position3D &tx, const Position3D &rx,
                                         AntennaConfig config, const RadioParams &radio,
                                         const DipoleParams &dipole,
                                         std::complex<double> fading) {
    const LinkGeometry geometry = link_geometry(tx, rx);
    const double beta = pathloss(geometry.distance, radio.carrier_frequency);
    const double amplitude = std::sqrt(radio.tx_power * beta * radio.rx_gain);
    return amplitude * field_config(config, geometry.azimuth, geometry.polar, dipole) * fading;
}

} // namespace orthant
