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

#include "orthant/rng.hpp"

#include <numeric>

namespace orthant {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream RandomStream::derive(std::uint64_t master_seed, StreamLabel label,
                                  std::uint64_t index) {
    // Two chained finalizer rounds mix label and index into the master seed;
    // a single xor would collide for (label ^ a, index ^ a) pairs.
    const std::uint64_t mixed =
        splitmix64(splitmix64(splitmix64(master_seed) ^ static_cast<std::uint64_t>(label)) ^
                   index);
    return RandomStream(mixed);
}

std::vector<std::size_t> random_permutation(std::size_t n, RandomStream &stream) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        // Modulo bias is below 2^-53 for any n this simulator sees (n <= a
        // few thousand devices), far under statistical test resolution.
        const std::size_t j = static_cast<std::size_t>(stream.next_u64() % i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

} // namespace orthant
