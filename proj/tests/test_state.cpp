// Copyright 2026 The qhed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "qhed/state.hpp"
#include "support.hpp"

using namespace qhed;

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

TEST_CASE("basis_state places a single unit amplitude") {
    const StateVector zero = basis_state(1, 0);
    CHECK(zero[0] == Amplitude{1.0, 0.0});
    CHECK(zero[1] == Amplitude{0.0, 0.0});

    const StateVector three = basis_state(2, 3);
    CHECK(three.size() == 4);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(three[i] == Amplitude{0.0, 0.0});
    }
    CHECK(three[3] == Amplitude{1.0, 0.0});

    const StateVector wide = basis_state(3, 0);
    CHECK(wide.size() == 8);
    CHECK(wide[0] == Amplitude{1.0, 0.0});

    CHECK_THROWS_AS(basis_state(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(basis_state(0, 0), std::invalid_argument);
}

TEST_CASE("basis states have exactly unit norm for all widths up to 12") {
    for (std::size_t nu = 1; nu <= 12; ++nu) {
        for (std::size_t k = 0; k < (std::size_t{1} << nu); ++k) {
            REQUIRE(state_norm(basis_state(nu, k)) == 1.0);
        }
    }
}

TEST_CASE("state_norm") {
    CHECK(state_norm(StateVector(1, {{0.6, 0.0}, {0.8, 0.0}})) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(state_norm(StateVector(1, {{1.0, 0.0}, {1.0, 0.0}})) ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
}

TEST_CASE("StateVector rejects malformed input") {
    CHECK_THROWS_AS(StateVector(2, {{1, 0}, {0, 0}}), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(StateVector(1, {{nan, 0}, {0, 0}}),
                    std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(StateVector(1, {{0, 0}, {inf, 0}}),
                    std::invalid_argument);
}

TEST_CASE("states_close compares amplitudes component-wise") {
    const StateVector zero = basis_state(1, 0);
    const StateVector one = basis_state(1, 1);
    CHECK(states_close(zero, zero, 1e-12));
    CHECK_FALSE(states_close(zero, one, 1e-12));
    const StateVector plus(1, {{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}});
    const StateVector quoted(
        1, {{0.7071067811865476, 0.0}, {0.7071067811865476, 0.0}});
    CHECK(states_close(plus, quoted, 1e-12));
    // Sensitive to global phase by design.
    const StateVector negated(1, {{-1.0, 0.0}, {0.0, 0.0}});
    CHECK_FALSE(states_close(zero, negated, 1e-12));
    CHECK(fidelity(zero, negated) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(states_close(zero, basis_state(2, 0), 1e-12),
                    std::invalid_argument);
}

TEST_CASE("states_close is reflexive and symmetric") {
    auto gen = test::rng(11);
    std::uniform_real_distribution<double> tol_dist(0.0, 0.5);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector a = test::random_unit_state(gen, 3);
        const StateVector b = test::random_unit_state(gen, 3);
        const double tol = tol_dist(gen);
        CHECK(states_close(a, a, tol));
        CHECK(states_close(b, b, tol));
        CHECK(states_close(a, b, tol) == states_close(b, a, tol));
    }
}

TEST_CASE("bloch_coordinates on the named states") {
    const BlochPoint north = bloch_coordinates(basis_state(1, 0));
    CHECK(north.theta == 0.0);
    CHECK(north.phi == 0.0);

    const BlochPoint south = bloch_coordinates(basis_state(1, 1));
    CHECK(south.theta == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(south.phi == 0.0);

    const BlochPoint equator = bloch_coordinates(
        StateVector(1, {{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}}));
    CHECK(equator.theta ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
    CHECK(equator.phi == 0.0);

    CHECK_THROWS_AS(bloch_coordinates(basis_state(2, 0)),
                    std::invalid_argument);
}

TEST_CASE("bloch round trip preserves the physical state") {
    auto gen = test::rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const StateVector original = test::random_unit_state(gen, 1);
        const StateVector rebuilt =
            state_from_bloch(bloch_coordinates(original));
        CHECK(fidelity(original, rebuilt) ==
              doctest::Approx(1.0).epsilon(1e-12));
        const BlochPoint point = bloch_coordinates(original);
        CHECK(point.theta >= 0.0);
        CHECK(point.theta <= std::numbers::pi);
        CHECK(point.phi >= 0.0);
        CHECK(point.phi < 2.0 * std::numbers::pi);
    }
}
