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

#include "orthant/antenna.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "orthant/constants.hpp"

namespace orthant {

namespace {

constexpr double kPoleSine = 1e-9;

// Electrical half-length k = pi * d_len * f0 / c and cos(k). A half-wave
// element has k = pi/2 analytically, but floating-point construction of the
// length leaves k a few ulp away; snapping cos(k) to exactly 0 there keeps
// the broadside field at exactly 1 instead of 1 - O(1e-16).
struct KernelParams {
    double k;
    double cos_k;
    bool half_wave;
};

KernelParams kernel_params(const DipoleParams &params) {
    const double k = kPi * params.dipole_length * params.carrier_frequency / kSpeedOfLight;
    const double half_pi = 0.5 * kPi;
    const bool half_wave = std::abs(k - half_pi) <= 1e-12 * half_pi;
    return KernelParams{k, half_wave ? 0.0 : std::cos(k), half_wave};
}

// Dipole element pattern at angle Psi off the element axis:
//
//   [cos(k * cos Psi) - cos(k)] / sin Psi
//
// The singularity at sin Psi = 0 is removable with limit 0 for every
// element length; below kPoleSine the half-wave case returns the limit
// directly and other lengths evaluate at sin Psi = kPoleSine as a stable
// proxy.
double kernel_field(double cos_psi, double sin_psi, const KernelParams &kp) {
    if (sin_psi < kPoleSine) {
        if (kp.half_wave) {
            return 0.0;
        }
        const double cos_proxy = std::copysign(std::sqrt(1.0 - kPoleSine * kPoleSine), cos_psi);
        return (std::cos(kp.k * cos_proxy) - kp.cos_k) / kPoleSine;
    }
    return (std::cos(kp.k * cos_psi) - kp.cos_k) / sin_psi;
}

// Cosine of the angle between the departure direction (azimuth, polar) and
// a world axis.
double cos_psi_for_axis(Axis axis, double azimuth, double polar) {
    switch (axis) {
    case Axis::X:
        return std::sin(polar) * std::cos(azimuth);
    case Axis::Y:
        return std::sin(polar) * std::sin(azimuth);
    case Axis::Z:
        return std::cos(polar);
    }
    return 0.0; // unreachable
}

double field_from_cos_psi(double cos_psi, const KernelParams &kp) {
    const double sin_psi = std::sqrt(std::fmax(0.0, 1.0 - cos_psi * cos_psi));
    return kernel_field(cos_psi, sin_psi, kp);
}

} // namespace

DipoleParams DipoleParams::half_wave(double carrier_frequency_hz) {
    return DipoleParams{carrier_frequency_hz, kSpeedOfLight / (2.0 * carrier_frequency_hz)};
}

double field_z(double polar, const DipoleParams &params) {
    return field_from_cos_psi(std::cos(polar), kernel_params(params));
}

double field_axis(Axis axis, double azimuth, double polar, const DipoleParams &params) {
    return field_from_cos_psi(cos_psi_for_axis(axis, azimuth, polar), kernel_params(params));
}

std::complex<double> field_config(AntennaConfig config, double azimuth, double polar,
                                  const DipoleParams &params) {
    const KernelParams kp = kernel_params(params);
    if (!is_cross_dipole(config)) {
        const double f =
            field_from_cos_psi(cos_psi_for_axis(single_axis(config), azimuth, polar), kp);
        return {f, 0.0};
    }
    const auto [a, b] = cross_axes(config);
    const double f_a = field_from_cos_psi(cos_psi_for_axis(a, azimuth, polar), kp);
    const double f_b = field_from_cos_psi(cos_psi_for_axis(b, azimuth, polar), kp);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {inv_sqrt2 * f_a, inv_sqrt2 * f_b};
}

double power_gain(AntennaConfig config, double azimuth, double polar,
                  const DipoleParams &params) {
    return std::norm(field_config(config, azimuth, polar, params));
}

Axis single_axis(AntennaConfig config) {
    switch (config) {
    case AntennaConfig::X:
        return Axis::X;
    case AntennaConfig::Y:
        return Axis::Y;
    default:
        return Axis::Z;
    }
}

std::pair<Axis, Axis> cross_axes(AntennaConfig config) {
    switch (config) {
    case AntennaConfig::XY:
        return {Axis::X, Axis::Y};
    case AntennaConfig::YZ:
        return {Axis::Y, Axis::Z};
    default:
        return {Axis::X, Axis::Z};
    }
}

std::string_view to_string(AntennaConfig config) {
    switch (config) {
    case AntennaConfig::X:
        return "x";
    case AntennaConfig::Y:
        return "y";
    case AntennaConfig::Z:
        return "z";
    case AntennaConfig::XY:
        return "xy";
    case AntennaConfig::YZ:
        return "yz";
    case AntennaConfig::XZ:
        return "xz";
    }
    return "?";
}

std::optional<AntennaConfig> parse_antenna_config(std::string_view tag) {
    std::string lower;
    lower.reserve(tag.size());
    for (char c : tag) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (AntennaConfig config : kAllAntennaConfigs) {
        if (lower == to_string(config)) {
            return config;
        }
    }
    return std::nullopt;
}

} // namespace orthant
