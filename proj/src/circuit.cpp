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

#include "qhed/circuit.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "qhed/kernels.hpp"

namespace qhed {

namespace {

void validate_targets(const StateVector &state, const Gate &gate,
                      const std::vector<std::size_t> &targets) {
    if (targets.size() != gate.arity) {
        throw std::invalid_argument(
            "apply_unitary: target count must equal gate arity");
    }
    if (gate.arity > state.num_qubits()) {
        throw std::invalid_argument(
            "apply_unitary: gate is wider than the register");
    }
    std::set<std::size_t> seen;
    for (std::size_t t : targets) {
        if (t >= state.num_qubits()) {
            throw std::invalid_argument(
                "apply_unitary: target index out of range");
        }
        if (!seen.insert(t).second) {
            throw std::invalid_argument(
                "apply_unitary: target indices must be distinct");
        }
    }
}

bool is_diagonal(const Gate &gate) {
    const std::size_t d = gate.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (r != c && gate.at(r, c) != Amplitude{0.0, 0.0}) {
                return false;
            }
        }
    }
    return true;
}

// Local index bit j (MSB first) of a gate lives at global bit
// nu - 1 - targets[j], since qubit 0 is the most significant index bit.
std::vector<std::size_t> local_offsets(std::size_t nu, const Gate &gate,
                                       const std::vector<std::size_t> &targets) {
    const std::size_t a = gate.arity;
    std::vector<std::size_t> offsets(gate.dim(), 0);
    for (std::size_t l = 0; l < offsets.size(); ++l) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < a; ++j) {
            if ((l >> (a - 1 - j)) & 1U) {
                off |= std::size_t{1} << (nu - 1 - targets[j]);
            }
        }
        offsets[l] = off;
    }
    return offsets;
}

} // namespace

StateVector apply_unitary(const StateVector &state, const Gate &gate,
                          const std::vector<std::size_t> &targets) {
    validate_targets(state, gate, targets);
    const std::size_t nu = state.num_qubits();
    std::vector<Amplitude> amps = state.amplitudes();

    if (gate.arity == 1) {
        const std::size_t stride = std::size_t{1} << (nu - 1 - targets[0]);
        kernels::active_kernels().apply_single_qubit(
            amps.data(), amps.size(), stride, gate.matrix.data());
        return {nu, std::move(amps)};
    }

    const std::vector<std::size_t> offsets = local_offsets(nu, gate, targets);

    if (is_diagonal(gate)) {
        const std::size_t a = gate.arity;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            std::size_t l = 0;
            for (std::size_t j = 0; j < a; ++j) {
                if (i & (std::size_t{1} << (nu - 1 - targets[j]))) {
                    l |= std::size_t{1} << (a - 1 - j);
                }
            }
            amps[i] *= gate.at(l, l);
        }
        return {nu, std::move(amps)};
    }

    // Gather each group of 2^a coupled amplitudes, apply the matrix,
    // scatter back. Groups are indexed by the non-target bit patterns.
    std::vector<std::size_t> rest_bits;
    for (std::size_t pos = 0; pos < nu; ++pos) {
        bool is_target_bit = false;
        for (std::size_t t : targets) {
            if (pos == nu - 1 - t) {
                is_target_bit = true;
                break;
            }
        }
        if (!is_target_bit) {
            rest_bits.push_back(pos);
        }
    }
    const std::size_t dim = gate.dim();
    std::vector<Amplitude> local(dim);
    const std::size_t groups = std::size_t{1} << rest_bits.size();
    for (std::size_t r = 0; r < groups; ++r) {
        std::size_t base = 0;
        for (std::size_t i = 0; i < rest_bits.size(); ++i) {
            if ((r >> i) & 1U) {
                base |= std::size_t{1} << rest_bits[i];
            }
        }
        for (std::size_t l = 0; l < dim; ++l) {
            local[l] = amps[base | offsets[l]];
        }
        for (std::size_t row = 0; row < dim; ++row) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t col = 0; col < dim; ++col) {
                acc += gate.at(row, col) * local[col];
            }
            amps[base | offsets[row]] = acc;
        }
    }
    return {nu, std::move(amps)};
}

StateVector run_circuit(const StateVector &initial,
                        const std::vector<CircuitStep> &steps) {
    StateVector state = initial;
    for (const CircuitStep &step : steps) {
        state = apply_unitary(state, step.gate, step.targets);
    }
    return state;
}

std::vector<CircuitStep> ghz_circuit(std::size_t num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("ghz_circuit: need at least 2 qubits");
    }
    const Gate h = standard_gate("H");
    const Gate cz = standard_gate("CZ");
    std::vector<CircuitStep> steps;
    steps.reserve(3 * num_qubits - 2);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        steps.push_back({h, {q}});
    }
    for (std::size_t q = 1; q < num_qubits; ++q) {
        steps.push_back({cz, {0, q}});
    }
    for (std::size_t q = 1; q < num_qubits; ++q) {
        steps.push_back({h, {q}});
    }
    return steps;
}

StateVector ghz_state(std::size_t num_qubits) {
    return run_circuit(basis_state(num_qubits, 0), ghz_circuit(num_qubits));
}

} // namespace qhed
