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

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhed/state.hpp"
#include "qhed/volume.hpp"

namespace qhed {

/// Bookkeeping produced by amplitude encoding: enough to undo it.
struct EncodingMeta {
    std::array<std::size_t, 3> original_dims; // M, L, N
    double norm_factor;                       // sqrt(sum v^2), > 0
    std::size_t num_qubits;                   // smallest nu with 2^nu >= MLN
    std::size_t padded_length;                // 2^num_qubits
};

/// Flattens and normalizes a volume into unit-norm coefficients
/// c = v / sqrt(sum v^2), zero-padded to the next power of two.
/// num_qubits is clamped to at least 1 so the result is always a valid
/// register. Throws DegenerateInputError for an all-zero volume.
std::pair<std::vector<double>, EncodingMeta>
encode_coefficients(const Volume &volume);

/// The coefficients of encode_coefficients as a pure quantum state
/// |f> = sum_k c_k |k>, basis index k = pixel position.
std::pair<StateVector, EncodingMeta> amplitude_encode(const Volume &volume);

/// Inverse of amplitude_encode: rescales by norm_factor and truncates the
/// padding, reproducing the original volume.
Volume decode_volume(const StateVector &state, const EncodingMeta &meta,
                     std::int64_t time_stamp);

} // namespace qhed
