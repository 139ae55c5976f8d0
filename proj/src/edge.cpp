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

#include "qhed/edge.hpp"

#include <cmath>
#include <stdexcept>

#include "qhed/kernels.hpp"

namespace qhed {

std::vector<double> cyclic_double(std::span<const double> coeffs) {
    if (coeffs.size() < 2) {
        throw std::invalid_argument("cyclic_double: need at least 2 entries");
    }
    std::vector<double> out(2 * coeffs.size());
    kernels::active_kernels().duplicate_adjacent(coeffs.data(), coeffs.size(),
                                                 out.data());
    return out;
}

std::vector<double> pairwise_hadamard(std::span<const double> doubled) {
    if (doubled.size() % 2 != 0) {
        throw std::invalid_argument("pairwise_hadamard: length must be even");
    }
    std::vector<double> out(doubled.size());
    kernels::active_kernels().butterfly_pairs(doubled.data(), out.data(),
                                              doubled.size());
    return out;
}

std::vector<double> project_differences(std::span<const double> transformed) {
    if (transformed.size() % 2 != 0) {
        throw std::invalid_argument(
            "project_differences: length must be even");
    }
    std::vector<double> out(transformed.size() / 2);
    kernels::active_kernels().gather_odd(transformed.data(),
                                         transformed.size(), out.data());
    return out;
}

EdgeVector edge_detect(std::span<const double> coeffs,
                       const EncodingMeta &meta, std::int64_t frame_time) {
    if (coeffs.size() != meta.padded_length) {
        throw std::invalid_argument(
            "edge_detect: coefficient count must equal meta.padded_length");
    }
    std::vector<double> stage = cyclic_double(coeffs);
    const auto &kern = kernels::active_kernels();
    kern.butterfly_pairs(stage.data(), stage.data(), stage.size());
    std::vector<double> diffs(coeffs.size());
    kern.gather_odd(stage.data(), stage.size(), diffs.data());
    return {std::move(diffs), frame_time, meta};
}

BoundaryMask boundary_mask(const EdgeVector &edges, double epsilon,
                           bool drop_wraparound) {
    if (epsilon < 0.0) {
        throw std::invalid_argument("boundary_mask: epsilon must be >= 0");
    }
    const std::size_t p = edges.coefficients.size();
    const std::size_t m = edges.meta.original_dims[0];
    const std::size_t pixel_count = edges.meta.original_dims[0] *
                                    edges.meta.original_dims[1] *
                                    edges.meta.original_dims[2];
    std::vector<std::uint8_t> bits(p, 0);
    for (std::size_t j = 0; j < p; ++j) {
        if (drop_wraparound) {
            // Position j differences flat pixels j and (j+1) mod P; keep it
            // only when both lie in the data and in the same grid column.
            const bool spatially_adjacent =
                j + 1 < pixel_count && (j + 1) % m != 0;
            if (!spatially_adjacent) {
                continue;
            }
        }
        bits[j] = std::abs(edges.coefficients[j]) > epsilon ? 1 : 0;
    }
    return {std::move(bits), epsilon, drop_wraparound};
}

} // namespace qhed
