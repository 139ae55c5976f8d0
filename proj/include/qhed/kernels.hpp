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
#include <span>

namespace qhed::kernels {

/// Arithmetic inner loops shared by the encoder, the edge-detection
/// transform, and the state-vector simulator. Each entry has a scalar
/// reference implementation and, on x86-64, an AVX2 variant selected at
/// runtime. Element-wise kernels perform the same operations in the same
/// per-element order in every variant; only `sum_squares` reassociates its
/// reduction and may differ from the scalar result by rounding.
struct KernelTable {
    const char *name;

    /// Sum of x[i]^2 over the first n entries.
    double (*sum_squares)(const double *x, std::size_t n);

    /// out[i] = in[i] * factor. in == out is allowed.
    void (*scale)(const double *in, double *out, std::size_t n,
                  double factor);

    /// Cyclic doubling: out[2j] = in[j], out[2j+1] = in[(j+1) mod p].
    /// out must have length 2p and must not alias in.
    void (*duplicate_adjacent)(const double *in, std::size_t p, double *out);

    /// Pairwise Hadamard butterfly over adjacent pairs:
    /// (u, v) at (2j, 2j+1) -> ((u+v)/sqrt2, (u-v)/sqrt2). n even.
    /// in == out is allowed.
    void (*butterfly_pairs)(const double *in, double *out, std::size_t n);

    /// out[j] = in[2j+1] for j < n/2. n even; out must not alias in.
    void (*gather_odd)(const double *in, std::size_t n, double *out);

    /// Single-qubit gate on a length-n amplitude array: for every index
    /// pair (i0, i1 = i0 + stride) with the stride bit clear in i0,
    ///   a[i0] <- m[0]*a[i0] + m[1]*a[i1]
    ///   a[i1] <- m[2]*a[i0] + m[3]*a[i1]
    /// stride is a power of two, n a multiple of 2*stride.
    void (*apply_single_qubit)(std::complex<double> *amps, std::size_t n,
                               std::size_t stride,
                               const std::complex<double> *m);
};

/// Portable reference implementations.
const KernelTable &scalar_kernels();

/// AVX2 implementations, or nullptr when unavailable (not compiled in, or
/// the running CPU lacks AVX2).
const KernelTable *avx2_kernels();

/// Fastest table usable on this machine. Honors QHED_KERNELS=scalar|avx2
/// (read once); an unusable request falls back to scalar.
const KernelTable &active_kernels();

/// Every table usable on this machine, scalar first. For equivalence tests.
std::span<const KernelTable *const> available_kernels();

} // namespace qhed::kernels
