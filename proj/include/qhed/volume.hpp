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
#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

namespace qhed {

/// Time-stamped M x L x N grid of non-negative pixel intensities.
/// Values are stored flat with the first axis fastest: grid position
/// (i, j, k), 0-based, lives at flat index i + j*M + k*M*L. This is the
/// column-major read-down-each-column order the rest of the pipeline
/// assumes.
struct Volume {
    std::array<std::size_t, 3> dims; // M, L, N
    std::vector<double> values;      // size M*L*N, finite, >= 0
    std::int64_t time_stamp;

    Volume(std::array<std::size_t, 3> dims_, std::vector<double> values_,
           std::int64_t time_stamp_);

    [[nodiscard]] std::size_t pixel_count() const noexcept {
        return dims[0] * dims[1] * dims[2];
    }
    [[nodiscard]] double at(std::size_t i, std::size_t j,
                            std::size_t k) const {
        return values[i + j * dims[0] + k * dims[0] * dims[1]];
    }
};

/// Flat vector (v_000, v_100, ..., v_{M-1}00, v_010, ...) of length M*L*N.
std::vector<double> flatten(const Volume &volume);

// Text format: line 1 "M L N s", then M*L*N whitespace-separated reals in
// flat order. Binary format: 16-byte header of four little-endian uint32
// (M, L, N, s) followed by M*L*N little-endian float64 in the same order.

Volume load_volume_text(std::istream &in, const std::string &source_name);
Volume load_volume_text(const std::filesystem::path &path);
Volume load_volume_binary(std::istream &in, const std::string &source_name);
Volume load_volume_binary(const std::filesystem::path &path);

void save_volume_text(const Volume &volume, std::ostream &out);
void save_volume_binary(const Volume &volume, std::ostream &out);

} // namespace qhed
