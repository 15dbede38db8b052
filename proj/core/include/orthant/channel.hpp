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

#ifndef ORTHANT_CHANNEL_HPP
#define ORTHANT_CHANNEL_HPP

#include <complex>

#include "orthant/antenna.hpp"
#include "orthant/geometry.hpp"
#include "orthant/rng.hpp"

namespace orthant {

// Power-domain unit conversions. Internals run in watts and linear ratios;
// dBm and dB appear only at input and output boundaries.
double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
double db_to_linear(double db);
double linear_to_db(double linear);

// Radio-link parameters shared by every link in a scenario.
struct RadioParams {
    double tx_power;          // watts
    double carrier_frequency; // Hz
    double bandwidth;         // Hz
    double noise_power;       // watts
    double rx_gain;           // linear

    // 23 dBm transmit power, 800 MHz carrier, 200 kHz bandwidth, thermal
    // noise floor over that bandwidth, unit receive gain.
    static RadioParams defaults();
};

// Free-space pathloss (lambda / (4 pi d))^2 as a linear power ratio.
// Requires distance >= kMinLinkDistance (throws CoLocatedDevices below it);
// nearer geometries must be resampled before they reach the channel model.
double pathloss(double distance_m, double carrier_frequency_hz);

// Thermal noise power in watts: -174 dBm/Hz integrated over the bandwidth.
double noise_power_watt(double bandwidth_hz);

// Unit-mean Rayleigh block-fading coefficient, circularly-symmetric complex
// Gaussian with E[|a|^2] = 1. Consumes exactly two uniform draws, so stream
// positions stay aligned across runs.
std::complex<double> draw_fading(RandomStream &stream);

// Complex baseband channel coefficient for one link: the transmit pattern
// evaluated toward the receiver, scaled by the root link budget and the
// block-fading coefficient:
//
//   h = sqrt(P_tx * beta * G_rx) * field_config(config, azimuth, polar) * alpha
//
// |h|^2 is the received signal power in watts. Throws CoLocatedDevices when
// the endpoints are closer than kMinLinkDistance.
std::complex<double> channel_coefficient(const Position3D &tx, const Position3D &rx,
                                         AntennaConfig config, const RadioParams &radio,
                                         const DipoleParams &dipole,
                                         std::complex<double> fading);

} // namespace orthant

#endif
