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

#include <cmath>

#include "doctest.h"
#include "orthant/constants.hpp"
#include "orthant/geometry.hpp"
#include "orthant/rng.hpp"

using namespace orthant;

namespace {

Position3D random_position(RandomStream &stream) {
    return Position3D{stream.uniform(-100.0, 100.0), stream.uniform(-100.0, 100.0),
                      stream.uniform(0.0, 300.0)};
}

// Smallest angular difference, wrap-aware.
double azimuth_delta(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

} // namespace

TEST_CASE("link straight up: polar 0, azimuth reported as 0") {
    const LinkGeometry geo = link_geometry({0, 0, 0}, {0, 0, 150});
    CHECK(geo.distance == 150.0);
    CHECK(geo.polar == 0.0);
    CHECK(geo.azimuth == 0.0);
}

TEST_CASE("link straight down: polar pi, azimuth reported as 0") {
    const LinkGeometry geo = link_geometry({0, 0, 150}, {0, 0, 0});
    CHECK(geo.distance == 150.0);
    CHECK(geo.polar == kPi);
    CHECK(geo.azimuth == 0.0);
}

TEST_CASE("link along +x: polar pi/2, azimuth 0") {
    const LinkGeometry geo = link_geometry({0, 0, 0}, {100, 0, 0});
    CHECK(geo.distance == 100.0);
    CHECK(geo.polar == kPi / 2.0); // acos(0) is exactly pi/2 in doubles
    CHECK(geo.azimuth == 0.0);
}

TEST_CASE("link along -x folds azimuth to -pi, keeping the [-pi, pi) range") {
    const LinkGeometry geo = link_geometry({0, 0, 0}, {-5, 0, 0});
    CHECK(geo.azimuth == -kPi);
}

TEST_CASE("oblique link (100, 100, 150)") {
    const LinkGeometry geo = link_geometry({0, 0, 0}, {100, 100, 150});
    // sqrt(100^2 + 100^2 + 150^2) = sqrt(42500), hand value frozen below.
    CHECK(geo.distance == doctest::Approx(206.15528128088303).epsilon(1e-15));
    CHECK(geo.polar == doctest::Approx(0.75596941042390775).epsilon(1e-14));
    CHECK(geo.azimuth == doctest::Approx(kPi / 4.0).epsilon(1e-15));
}

TEST_CASE("co-located devices raise CoLocatedDevices") {
    CHECK_THROWS_AS(link_geometry({1, 2, 3}, {1, 2, 3}), CoLocatedDevices);
    CHECK_THROWS_AS(link_geometry({0, 0, 0}, {0.05, 0, 0}), CoLocatedDevices);
    CHECK_NOTHROW(link_geometry({0, 0, 0}, {kMinLinkDistance, 0, 0}));
}

TEST_CASE("angle ranges hold over random links") {
    RandomStream stream(2024);
    for (int i = 0; i < 1000; ++i) {
        const Position3D tx = random_position(stream);
        const Position3D rx = random_position(stream);
        if (std::abs(tx.x - rx.x) + std::abs(tx.y - rx.y) + std::abs(tx.z - rx.z) < 1.0) {
            continue;
        }
        const LinkGeometry geo = link_geometry(tx, rx);
        CHECK(geo.azimuth >= -kPi);
        CHECK(geo.azimuth < kPi);
        CHECK(geo.polar >= 0.0);
        CHECK(geo.polar <= kPi);
    }
}

TEST_CASE("distance is symmetric and forward/reverse polars are antipodal") {
    RandomStream stream(7);
    for (int i = 0; i < 500; ++i) {
        const Position3D a = random_position(stream);
        const Position3D b = random_position(stream);
        if (std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z) < 1.0) {
            continue;
        }
        const LinkGeometry fwd = link_geometry(a, b);
        const LinkGeometry rev = link_geometry(b, a);
        CHECK(fwd.distance == rev.distance);
        CHECK(fwd.polar + rev.polar == doctest::Approx(kPi).epsilon(1e-12));
    }
}

TEST_CASE("translation invariance to 1e-9 relative") {
    RandomStream stream(99);
    for (int i = 0; i < 200; ++i) {
        Position3D a = random_position(stream);
        Position3D b = random_position(stream);
        if (std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z) < 1.0) {
            continue;
        }
        const double ox = stream.uniform(-1000.0, 1000.0);
        const double oy = stream.uniform(-1000.0, 1000.0);
        const double oz = stream.uniform(0.0, 1000.0);
        const LinkGeometry base = link_geometry(a, b);
        const LinkGeometry moved =
            link_geometry({a.x + ox, a.y + oy, a.z + oz}, {b.x + ox, b.y + oy, b.z + oz});
        CHECK(moved.distance == doctest::Approx(base.distance).epsilon(1e-9));
        CHECK(std::abs(moved.polar - base.polar) < 1e-9);
        CHECK(azimuth_delta(moved.azimuth, base.azimuth) < 1e-9);
    }
}

TEST_CASE("round trip: (distance, azimuth, polar) reconstructs rx - tx") {
    RandomStream stream(31);
    for (int i = 0; i < 500; ++i) {
        const Position3D tx = random_position(stream);
        const Position3D rx = random_position(stream);
        if (std::abs(tx.x - rx.x) + std::abs(tx.y - rx.y) + std::abs(tx.z - rx.z) < 1.0) {
            continue;
        }
        const LinkGeometry geo = link_geometry(tx, rx);
        const double dx = geo.distance * std::sin(geo.polar) * std::cos(geo.azimuth);
        const double dy = geo.distance * std::sin(geo.polar) * std::sin(geo.azimuth);
        const double dz = geo.distance * std::cos(geo.polar);
        const double ex = dx - (rx.x - tx.x);
        const double ey = dy - (rx.y - tx.y);
        const double ez = dz - (rx.z - tx.z);
        const double error = std::sqrt(ex * ex + ey * ey + ez * ez);
        CHECK(error < 1e-9 * geo.distance);
    }
}
