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

#include "qhed/kernels.hpp"

#include <numbers>

namespace qhed::kernels {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

double sum_squares_scalar(const double *x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i] * x[i];
    }
    return acc;
}

void scale_scalar(const double *in, double *out, std::size_t n,
                  double factor) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = in[i] * factor;
    }
}

void duplicate_adjacent_scalar(const double *in, std::size_t p, double *out) {
    for (std::size_t j = 0; j + 1 < p; ++j) {
        out[2 * j] = in[j];
        out[2 * j + 1] = in[j + 1];
    }
    out[2 * p - 2] = in[p - 1];
    out[2 * p - 1] = in[0];
}

void butterfly_pairs_scalar(const double *in, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; i += 2) {
        const double u = in[i];
        const double v = in[i + 1];
        out[i] = (u + v) * kInvSqrt2;
        out[i + 1] = (u - v) * kInvSqrt2;
    }
}

void gather_odd_scalar(const double *in, std::size_t n, double *out) {
    for (std::size_t j = 0; 2 * j + 1 < n; ++j) {
        out[j] = in[2 * j + 1];
    }
}

// Mirrors the operation order of the AVX2 variant (mul, mul, sub/add per
// complex product, then one add per component) so the two stay bit-equal
// on the same input.
void apply_single_qubit_scalar(std::complex<double> *amps, std::size_t n,
                               std::size_t stride,
                               const std::complex<double> *m) {
    const double m00r = m[0].real(), m00i = m[0].imag();
    const double m01r = m[1].real(), m01i = m[1].imag();
    const double m10r = m[2].real(), m10i = m[2].imag();
    const double m11r = m[3].real(), m11i = m[3].imag();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const double v0r = amps[i0].real(), v0i = amps[i0].imag();
            const double v1r = amps[i1].real(), v1i = amps[i1].imag();
            amps[i0] = {(v0r * m00r - v0i * m00i) + (v1r * m01r - v1i * m01i),
                        (v0i * m00r + v0r * m00i) + (v1i * m01r + v1r * m01i)};
            amps[i1] = {(v0r * m10r - v0i * m10i) + (v1r * m11r - v1i * m11i),
                        (v0i * m10r + v0r * m10i) + (v1i * m11r + v1r * m11i)};
        }
    }
}

} // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{
        "scalar",
        sum_squares_scalar,
        scale_scalar,
        duplicate_adjacent_scalar,
        butterfly_pairs_scalar,
        gather_odd_scalar,
        apply_single_qubit_scalar,
    };
    return table;
}

} // namespace qhed::kernels
