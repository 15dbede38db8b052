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

#include <benchmark/benchmark.h>

#include "orthant/antenna.hpp"
#include "orthant/channel.hpp"
#include "orthant/rng.hpp"

namespace {

using namespace orthant;

const DipoleParams kHalfWave = DipoleParams::half_wave(800.0e6);

void BM_PowerGainSingleAxis(benchmark::State &state) {
    RandomStream stream(1);
    double azimuth = stream.uniform(-kPi, kPi);
    double polar = stream.uniform(0.0, kPi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(power_gain(AntennaConfig::Y, azimuth, polar, kHalfWave));
    }
}
BENCHMARK(BM_PowerGainSingleAxis);

void BM_PowerGainCross(benchmark::State &state) {
    RandomStream stream(2);
    double azimuth = stream.uniform(-kPi, kPi);
    double polar = stream.uniform(0.0, kPi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(power_gain(AntennaConfig::YZ, azimuth, polar, kHalfWave));
    }
}
BENCHMARK(BM_PowerGainCross);

void BM_ChannelCoefficient(benchmark::State &state) {
    RandomStream stream(3);
    const Position3D tx{stream.uniform(-100, 100), stream.uniform(-100, 100), 0.0};
    const Position3D rx{stream.uniform(-100, 100), stream.uniform(-100, 100), 150.0};
    const RadioParams radio = RadioParams::defaults();
    const std::complex<double> fading = draw_fading(stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            channel_coefficient(tx, rx, AntennaConfig::XZ, radio, kHalfWave, fading));
    }
}
BENCHMARK(BM_ChannelCoefficient);

} // namespace
