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

#include "orthant/scenario.hpp"

namespace {

using namespace orthant;

ScenarioConfig bench_config(int dipoles, Strategy strategy) {
    ScenarioConfig config;
    config.pairs = 4;
    config.air_rx_percentage = 50.0;
    config.dipoles = dipoles;
    config.strategy = strategy;
    config.seed = 99;
    return config;
}

void BM_TrialFixed(benchmark::State &state) {
    const ScenarioConfig config = bench_config(1, Strategy::Fixed);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(config, trial++));
    }
}
BENCHMARK(BM_TrialFixed);

void BM_TrialMaxPower(benchmark::State &state) {
    const ScenarioConfig config = bench_config(3, Strategy::MaxPower);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(config, trial++));
    }
}
BENCHMARK(BM_TrialMaxPower);

void BM_TrialMaxSlnr(benchmark::State &state) {
    const ScenarioConfig config = bench_config(3, Strategy::MaxSlnr);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(config, trial++));
    }
}
BENCHMARK(BM_TrialMaxSlnr);

void BM_TopologyRealization(benchmark::State &state) {
    const ScenarioConfig config = bench_config(1, Strategy::Fixed);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        TrialStreams streams = TrialStreams::derive(config.seed, trial++);
        benchmark::DoNotOptimize(generate_topology(config, streams));
    }
}
BENCHMARK(BM_TopologyRealization);

} // namespace

BENCHMARK_MAIN();
