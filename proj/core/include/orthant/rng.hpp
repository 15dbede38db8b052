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

#ifndef ORTHANT_RNG_HPP
#define ORTHANT_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace orthant {

// Independent substreams of one master seed. Each (label, index) pair maps
// to its own deterministically derived stream, so adding draws to one stream
// never perturbs another and per-trial streams can be created in any order.
enum class StreamLabel : std::uint64_t {
    Topology = 0x746f706f6c6f6779ULL,   // device placement
    Assignment = 0x61737369676e6d74ULL, // aerial role assignment
    Fading = 0x66616469676e6721ULL,     // small-scale channel coefficients
};

// splitmix64 finalizer; used only to derive seeds, never to produce variates.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random stream. All simulation randomness flows through this
// class so results are reproducible bit for bit from (master_seed, trial).
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Stream for (master_seed, label, index). index is typically the trial
    // number; streams with distinct labels or indices are independent.
    static RandomStream derive(std::uint64_t master_seed, StreamLabel label, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits. Division-free so the
    // result is identical on every platform with IEEE doubles.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::mt19937_64 engine_;
};

// Fisher-Yates shuffle of [0, n). Implemented directly (not std::shuffle)
// because the exact sequence of engine draws is part of the reproducibility
// contract and must not vary across standard library implementations.
std::vector<std::size_t> random_permutation(std::size_t n, RandomStream &stream);

} // namespace orthant

#endif
