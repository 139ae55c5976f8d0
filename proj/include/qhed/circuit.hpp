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
#include <vector>

#include "qhed/gates.hpp"
#include "qhed/state.hpp"

namespace qhed {

/// One gate placement: targets.size() must equal gate.arity, indices
/// distinct and within the register. For two-qubit catalog gates,
/// targets[0] is the control and targets[1] the target.
struct CircuitStep {
    Gate gate;
    std::vector<std::size_t> targets;
};

/// Applies `gate` to the listed qubits (identity on the rest) and returns
/// the evolved state. O(2^n) for single-qubit gates via strided pair
/// updates; diagonal gates of any arity take a multiply-only path; other
/// gates use a gather/apply/scatter loop over basis-state groups.
StateVector apply_unitary(const StateVector &state, const Gate &gate,
                          const std::vector<std::size_t> &targets);

/// Left-to-right application of each step.
StateVector run_circuit(const StateVector &initial,
                        const std::vector<CircuitStep> &steps);

/// The GHZ preparation circuit drawn with phase couplings: H on every
/// qubit, CZ from qubit 0 to each other qubit, then H on qubits 1..n-1.
/// Equivalent to the familiar H + CNOT fan-out form since H.CZ.H = CNOT.
std::vector<CircuitStep> ghz_circuit(std::size_t num_qubits);

/// (|0...0> + |1...1>)/sqrt2 on n >= 2 qubits, built via ghz_circuit.
StateVector ghz_state(std::size_t num_qubits);

} // namespace qhed
