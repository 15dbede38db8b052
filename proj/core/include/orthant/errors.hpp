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

#ifndef ORTHANT_ERRORS_HPP
#define ORTHANT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthant {

// A Tx-Rx link fell inside the minimum link distance guard.
class CoLocatedDevices : public std::runtime_error {
  public:
    explicit CoLocatedDevices(double distance_m)
        : std::runtime_error("co-located devices: link distance " + std::to_string(distance_m) +
                             " m is below the minimum of 0.1 m") {}
};

// A selection strategy was handed a candidate set it does not accept.
class InvalidCandidateSet : public std::invalid_argument {
  public:
    explicit InvalidCandidateSet(const std::string &what) : std::invalid_argument(what) {}
};

// An aggregation was asked to summarize zero records.
class EmptyInput : public std::invalid_argument {
  public:
    explicit EmptyInput(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace orthant

#endif
