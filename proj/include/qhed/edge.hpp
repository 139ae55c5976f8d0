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

#include <cstdint>
#include <span>
#include <vector>

#include "qhed/encoding.hpp"

namespace qhed {

/// Cyclic differences of one frame's coefficients:
/// coefficients[j] = (c_j - c_{(j+1) mod P}) / sqrt2, P = meta.padded_length.
/// Entry j compares flat pixel positions j and j+1, so a nonzero value
/// marks an intensity change between them.
struct EdgeVector {
    std::vector<double> coefficients;
    std::int64_t frame_time;
    EncodingMeta meta;
};

/// Thresholded boundary indicator: bits[j] == 1 iff |coefficients[j]|
/// exceeds epsilon, with seam positions forced to 0 when
/// wraparound_removed is set.
struct BoundaryMask {
    std::vector<std::uint8_t> bits;
    double epsilon;
    bool wraparound_removed;
};

/// Embeds P coefficients into R^{2P} as adjacent pairs:
/// (c_0, c_1, c_1, c_2, ..., c_{P-1}, c_0). Requires P >= 2.
std::vector<double> cyclic_double(std::span<const double> coeffs);

/// Applies the 2x2 Hadamard to every adjacent pair:
/// (u, v) -> ((u+v)/sqrt2, (u-v)/sqrt2). Requires even length.
std::vector<double> pairwise_hadamard(std::span<const double> doubled);

/// Keeps the odd-index (difference) components. Requires even length.
std::vector<double> project_differences(std::span<const double> transformed);

/// The full transform: project_differences(pairwise_hadamard(
/// cyclic_double(coeffs))), yielding ((c_j - c_{(j+1) mod P})/sqrt2)_j.
EdgeVector edge_detect(std::span<const double> coeffs,
                       const EncodingMeta &meta, std::int64_t frame_time);

/// Thresholds |coefficients| at epsilon. With drop_wraparound, positions
/// whose difference pair is not spatially adjacent in the original grid
/// (column ends, which include slab ends; pairs touching the zero padding;
/// the final c_{P-1} - c_0 term) are forced to 0.
BoundaryMask boundary_mask(const EdgeVector &edges, double epsilon,
                           bool drop_wraparound);

} // namespace qhed
