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

#include "qhed/encoding.hpp"

#include <cmath>

#include "qhed/errors.hpp"
#include "qhed/kernels.hpp"

namespace qhed {

namespace {

std::size_t padded_exponent(std::size_t pixel_count) {
    std::size_t nu = 1; // a register needs at least one qubit
    while ((std::size_t{1} << nu) < pixel_count) {
        ++nu;
    }
    return nu;
}

} // namespace

std::pair<std::vector<double>, EncodingMeta>
encode_coefficients(const Volume &volume) {
    const auto &kern = kernels::active_kernels();
    const std::size_t count = volume.pixel_count();
    const double norm_sq = kern.sum_squares(volume.values.data(), count);
    if (norm_sq == 0.0) {
        throw DegenerateInputError(
            "amplitude encoding undefined for an all-zero volume (time " +
            std::to_string(volume.time_stamp) + ")");
    }
    const double norm = std::sqrt(norm_sq);
    const std::size_t nu = padded_exponent(count);
    const std::size_t padded = std::size_t{1} << nu;
    std::vector<double> coeffs(padded, 0.0);
    kern.scale(volume.values.data(), coeffs.data(), count, 1.0 / norm);
    return {std::move(coeffs),
            EncodingMeta{volume.dims, norm, nu, padded}};
}

std::pair<StateVector, EncodingMeta> amplitude_encode(const Volume &volume) {
    auto [coeffs, meta] = encode_coefficients(volume);
    std::vector<Amplitude> amps(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        amps[i] = Amplitude{coeffs[i], 0.0};
    }
    return {StateVector{meta.num_qubits, std::move(amps)}, meta};
}

Volume decode_volume(const StateVector &state, const EncodingMeta &meta,
                     std::int64_t time_stamp) {
    if (state.size() != meta.padded_length) {
        throw std::invalid_argument(
            "decode_volume: state length does not match encoding meta");
    }
    const std::size_t count =
        meta.original_dims[0] * meta.original_dims[1] * meta.original_dims[2];
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = state[i].real() * meta.norm_factor;
    }
    return {meta.original_dims, std::move(values), time_stamp};
}

} // namespace qhed
