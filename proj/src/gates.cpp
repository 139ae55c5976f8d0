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

#include "qhed/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qhed {

Gate::Gate(std::size_t arity_, std::vector<Amplitude> matrix_)
    : arity(arity_), matrix(std::move(matrix_)) {
    if (arity < 1 || arity >= 32) {
        throw std::invalid_argument("Gate: arity must be in [1, 31]");
    }
    const std::size_t d = dim();
    if (matrix.size() != d * d) {
        throw std::invalid_argument("Gate: matrix must be 2^arity x 2^arity");
    }
}

Gate standard_gate(std::string_view name) {
    constexpr double k = std::numbers::sqrt2 / 2.0;
    if (name == "I") {
        return {1, {1, 0, 0, 1}};
    }
    if (name == "H") {
        return {1, {k, k, k, -k}};
    }
    if (name == "X") {
        return {1, {0, 1, 1, 0}};
    }
    if (name == "Y") {
        return {1, {0, Amplitude{0, -1}, Amplitude{0, 1}, 0}};
    }
    if (name == "Z") {
        return {1, {1, 0, 0, -1}};
    }
    if (name == "T") {
        // pi/8 gate: diag(1, e^{i pi/4}).
        return {1, {1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0)}};
    }
    if (name == "CNOT") {
        return {2, {1, 0, 0, 0, //
                    0, 1, 0, 0, //
                    0, 0, 0, 1, //
                    0, 0, 1, 0}};
    }
    if (name == "CZ") {
        return {2, {1, 0, 0, 0, //
                    0, 1, 0, 0, //
                    0, 0, 1, 0, //
                    0, 0, 0, -1}};
    }
    throw std::invalid_argument("standard_gate: unknown gate name '" +
                                std::string(name) + "'");
}

Gate tensor(const Gate &a, const Gate &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    std::vector<Amplitude> out(da * db * da * db);
    for (std::size_t ir = 0; ir < da; ++ir) {
        for (std::size_t ic = 0; ic < da; ++ic) {
            const Amplitude lhs = a.at(ir, ic);
            for (std::size_t jr = 0; jr < db; ++jr) {
                for (std::size_t jc = 0; jc < db; ++jc) {
                    out[(ir * db + jr) * da * db + (ic * db + jc)] =
                        lhs * b.at(jr, jc);
                }
            }
        }
    }
    return {a.arity + b.arity, std::move(out)};
}

double unitarity_error(const Gate &gate) {
    const std::size_t d = gate.dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Amplitude entry{0.0, 0.0};
            for (std::size_t i = 0; i < d; ++i) {
                entry += std::conj(gate.at(i, r)) * gate.at(i, c);
            }
            if (r == c) {
                entry -= 1.0;
            }
            worst = std::max(worst, std::abs(entry));
        }
    }
    return worst;
}

bool is_unitary(const Gate &gate, double tol) {
    return unitarity_error(gate) <= tol;
}

} // namespace qhed
