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

#include <complex>
#include <cstddef>
#include <vector>

namespace qhed {

using Amplitude = std::complex<double>;

/// Dense pure state over 2^n computational basis states. Immutable after
/// construction; operations return new values. Basis index k reads qubit 0
/// as the most significant bit, so |abc> lives at index 4a + 2b + c.
class StateVector {
  public:
    /// Takes ownership of the amplitudes. Requires num_qubits >= 1,
    /// amplitudes.size() == 2^num_qubits, and every entry finite.
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] const std::vector<Amplitude> &amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }

  private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Spherical coordinates of a single-qubit pure state, global phase dropped.
/// theta in [0, pi]; phi in [0, 2*pi), canonicalized to 0 at the poles.
struct BlochPoint {
    double theta;
    double phi;
};

/// Computational basis state |index> on num_qubits qubits.
StateVector basis_state(std::size_t num_qubits, std::size_t index);

/// Euclidean norm sqrt(sum |amplitude|^2). 1 for any physical state.
double state_norm(const StateVector &state);

/// True iff the largest component-wise |a_i - b_i| is at most tol.
/// Sensitive to global phase; use fidelity() for phase-free comparison.
bool states_close(const StateVector &a, const StateVector &b, double tol);

/// |<a|b>|, the overlap magnitude. 1 iff equal up to global phase
/// (for unit vectors).
double fidelity(const StateVector &a, const StateVector &b);

/// Bloch-sphere coordinates of a unit single-qubit state: the returned
/// (theta, phi) satisfy state == cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
/// up to global phase.
BlochPoint bloch_coordinates(const StateVector &state);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
StateVector state_from_bloch(const BlochPoint &point);

} // namespace qhed
