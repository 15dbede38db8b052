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

#ifndef ORTHANT_CONSTANTS_HPP
#define ORTHANT_CONSTANTS_HPP

namespace orthant {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Speed of light in vacuum [m/s].
inline constexpr double kSpeedOfLight = 299792458.0;

// Links shorter than this are treated as co-located devices. Free-space
// pathloss diverges as the distance goes to zero, so topology generation
// resamples positions that fall inside this guard.
inline constexpr double kMinLinkDistance = 0.1;

} // namespace orthant

#endif
