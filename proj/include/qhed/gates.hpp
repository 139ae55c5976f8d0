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

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qhed/state.hpp"

namespace qhed {

/// Unitary acting on `arity` qubits, stored as a dense row-major
/// 2^arity x 2^arity matrix. Row/column bit 0 of the local index is the
/// first target qubit (most significant), matching ket order.
struct Gate {
    std::size_t arity;
    std::vector<Amplitude> matrix;

    Gate(std::size_t arity_, std::vector<Amplitude> matrix_);

    [[nodiscard]] std::size_t dim() const noexcept {
        return std::size_t{1} << arity;
    }
    [[nodiscard]] const Amplitude &at(std::size_t row, std::size_t col) const {
        return matrix[row * dim() + col];
    }
};

/// Catalog lookup by name: one of H, X, Y, Z, T, CNOT, CZ, I.
/// Unknown names raise std::invalid_argument.
Gate standard_gate(std::string_view name);

/// Kronecker product a (x) b; the result acts on a.arity + b.arity qubits
/// with a on the high-order (leading) qubits.
Gate tensor(const Gate &a, const Gate &b);

/// max entry magnitude of (U^dagger U - I).
double unitarity_error(const Gate &gate);

/// True iff unitarity_error(gate) <= tol.
bool is_unitary(const Gate &gate, double tol = 1e-12);

} // namespace qhed
