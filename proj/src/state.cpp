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

#include "qhed/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qhed/kernels.hpp"

namespace qhed {

StateVector::StateVector(std::size_t num_qubits,
                         std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits_ < 1 || num_qubits_ >= 64) {
        throw std::invalid_argument("StateVector: qubit count must be in [1, 63]");
    }
    if (amps_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument(
            "StateVector: amplitude count must be 2^num_qubits");
    }
    for (const Amplitude &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument(
                "StateVector: amplitudes must be finite");
        }
    }
}

StateVector basis_state(std::size_t num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits >= 64) {
        throw std::invalid_argument("basis_state: qubit count must be in [1, 63]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return {num_qubits, std::move(amps)};
}

double state_norm(const StateVector &state) {
    // |z|^2 = re^2 + im^2, so the interleaved buffer is one flat reduction.
    const auto *raw =
        reinterpret_cast<const double *>(state.amplitudes().data());
    return std::sqrt(
        kernels::active_kernels().sum_squares(raw, 2 * state.size()));
}

bool states_close(const StateVector &a, const StateVector &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("states_close: qubit counts differ");
    }
    if (tol < 0.0) {
        throw std::invalid_argument("states_close: tolerance must be >= 0");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("fidelity: qubit counts differ");
    }
    Amplitude overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::abs(overlap);
}

BlochPoint bloch_coordinates(const StateVector &state) {
    if (state.num_qubits() != 1) {
        throw std::invalid_argument(
            "bloch_coordinates: state must be a single qubit");
    }
    const Amplitude alpha = state[0];
    const Amplitude beta = state[1];
    const double a = std::abs(alpha);
    const double b = std::abs(beta);
    // atan2 lands exactly on 0 / pi at the poles.
    const double theta = 2.0 * std::atan2(b, a);
    if (a == 0.0 || b == 0.0) {
        return {theta, 0.0};
    }
    double phi = std::arg(beta) - std::arg(alpha);
    const double two_pi = 2.0 * std::numbers::pi;
    if (phi < 0.0) {
        phi += two_pi;
    }
    if (phi >= two_pi) {
        phi -= two_pi;
    }
    return {theta, phi};
}

StateVector state_from_bloch(const BlochPoint &point) {
    const double half = point.theta / 2.0;
    return {1,
            {Amplitude{std::cos(half), 0.0},
             std::polar(std::sin(half), point.phi)}};
}

} // namespace qhed
