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

#include <array>
#include <cmath>
#include <numbers>

#include "qhed/gates.hpp"
#include "support.hpp"

using namespace qhed;

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

double max_entry_diff(const Gate &a, const Gate &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.matrix.size(); ++i) {
        worst = std::max(worst, std::abs(a.matrix[i] - b.matrix[i]));
    }
    return worst;
}
} // namespace

TEST_CASE("catalog matrices match their conventional forms") {
    const Gate h = standard_gate("H");
    CHECK(h.arity == 1);
    CHECK(h.at(0, 0).real() == kInvSqrt2);
    CHECK(h.at(0, 1).real() == kInvSqrt2);
    CHECK(h.at(1, 0).real() == kInvSqrt2);
    CHECK(h.at(1, 1).real() == -kInvSqrt2);

    const Gate x = standard_gate("X");
    CHECK(x.matrix == std::vector<Amplitude>{0, 1, 1, 0});

    const Gate cnot = standard_gate("CNOT");
    CHECK(cnot.arity == 2);
    const std::array<std::size_t, 4> image{0, 1, 3, 2}; // rows 3 and 4 swap
    for (std::size_t col = 0; col < 4; ++col) {
        for (std::size_t row = 0; row < 4; ++row) {
            CHECK(cnot.at(row, col) ==
                  (row == image[col] ? Amplitude{1, 0} : Amplitude{0, 0}));
        }
    }

    const Gate t = standard_gate("T");
    CHECK(t.at(0, 0) == Amplitude{1, 0});
    CHECK(t.at(1, 1).real() ==
          doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(t.at(1, 1).imag() ==
          doctest::Approx(kInvSqrt2).epsilon(1e-15));

    CHECK_THROWS_AS(standard_gate("SWAP"), std::invalid_argument);
    CHECK_THROWS_AS(standard_gate(""), std::invalid_argument);
}

TEST_CASE("every catalog gate is unitary to 1e-12") {
    for (const char *name : {"I", "H", "X", "Y", "Z", "T", "CNOT", "CZ"}) {
        CAPTURE(name);
        CHECK(unitarity_error(standard_gate(name)) < 1e-12);
    }
}

TEST_CASE("tensor product structure") {
    const Gate i = standard_gate("I");
    const Gate h = standard_gate("H");
    const Gate x = standard_gate("X");

    SUBCASE("identity law") {
        const Gate ii = tensor(i, i);
        CHECK(ii.arity == 2);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                CHECK(ii.at(r, c) ==
                      (r == c ? Amplitude{1, 0} : Amplitude{0, 0}));
            }
        }
    }

    SUBCASE("hand-expanded H (x) I entries") {
        const Gate hi = tensor(h, i);
        CHECK(hi.at(0, 0).real() == kInvSqrt2);
        CHECK(hi.at(0, 2).real() == kInvSqrt2);
        CHECK(hi.at(0, 1) == Amplitude{0, 0});
        CHECK(hi.at(0, 3) == Amplitude{0, 0});
    }

    SUBCASE("X (x) X flips both qubits") {
        const Gate xx = tensor(x, x);
        // column |00> should be |11>
        CHECK(xx.at(3, 0) == Amplitude{1, 0});
        CHECK(xx.at(0, 0) == Amplitude{0, 0});
    }

    SUBCASE("associativity") {
        auto gen = test::rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            const Gate a{1, test::random_amplitudes(gen, 4)};
            const Gate b{1, test::random_amplitudes(gen, 4)};
            const Gate c{1, test::random_amplitudes(gen, 4)};
            CHECK(max_entry_diff(tensor(tensor(a, b), c),
                                 tensor(a, tensor(b, c))) < 1e-12);
        }
    }
}
