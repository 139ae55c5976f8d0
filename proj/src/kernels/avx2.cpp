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

// Compiled with -mavx2 only. Callers must gate on avx2_kernels() != nullptr,
// which checks the running CPU. No FMA is used so that every element-wise
// kernel performs the same roundings as the scalar reference.

#include "qhed/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>
#include <numbers>

namespace qhed::kernels {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

double sum_squares_avx2(const double *x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d sum2 = _mm_add_pd(lo, hi);
    double total = _mm_cvtsd_f64(sum2) + _mm_cvtsd_f64(_mm_unpackhi_pd(sum2, sum2));
    for (; i < n; ++i) {
        total += x[i] * x[i];
    }
    return total;
}

void scale_avx2(const double *in, double *out, std::size_t n, double factor) {
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(in + i), f));
    }
    for (; i < n; ++i) {
        out[i] = in[i] * factor;
    }
}

void duplicate_adjacent_avx2(const double *in, std::size_t p, double *out) {
    // Interleave in[j..j+3] with in[j+1..j+4] into (in[j], in[j+1], ...).
    std::size_t j = 0;
    for (; j + 5 <= p; j += 4) {
        const __m256d a = _mm256_loadu_pd(in + j);
        const __m256d b = _mm256_loadu_pd(in + j + 1);
        const __m256d lo = _mm256_unpacklo_pd(a, b); // a0 b0 a2 b2
        const __m256d hi = _mm256_unpackhi_pd(a, b); // a1 b1 a3 b3
        _mm256_storeu_pd(out + 2 * j, _mm256_permute2f128_pd(lo, hi, 0x20));
        _mm256_storeu_pd(out + 2 * j + 4,
                         _mm256_permute2f128_pd(lo, hi, 0x31));
    }
    for (; j + 1 < p; ++j) {
        out[2 * j] = in[j];
        out[2 * j + 1] = in[j + 1];
    }
    out[2 * p - 2] = in[p - 1];
    out[2 * p - 1] = in[0];
}

void butterfly_pairs_avx2(const double *in, double *out, std::size_t n) {
    const __m256d k = _mm256_set1_pd(kInvSqrt2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(in + i);        // u0 v0 u1 v1
        const __m256d s = _mm256_permute_pd(v, 0b0101);   // v0 u0 v1 u1
        const __m256d sum = _mm256_add_pd(v, s);          // u+v in even lanes
        const __m256d diff = _mm256_sub_pd(s, v);         // u-v in odd lanes
        const __m256d mixed = _mm256_blend_pd(sum, diff, 0b1010);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(mixed, k));
    }
    for (; i < n; i += 2) {
        const double u = in[i];
        const double v = in[i + 1];
        out[i] = (u + v) * kInvSqrt2;
        out[i + 1] = (u - v) * kInvSqrt2;
    }
}

void gather_odd_avx2(const double *in, std::size_t n, double *out) {
    std::size_t j = 0;
    for (; 2 * (j + 4) <= n; j += 4) {
        const __m256d a = _mm256_loadu_pd(in + 2 * j);     // x0 x1 x2 x3
        const __m256d b = _mm256_loadu_pd(in + 2 * j + 4); // x4 x5 x6 x7
        const __m256d t = _mm256_unpackhi_pd(a, b);        // x1 x5 x3 x7
        _mm256_storeu_pd(out + j, _mm256_permute4x64_pd(t, 0xD8));
    }
    for (; 2 * j + 1 < n; ++j) {
        out[j] = in[2 * j + 1];
    }
}

// (re, im, re, im) times the complex scalar (cr, ci).
inline __m256d cmul(__m256d v, __m256d cr, __m256d ci) {
    const __m256d t1 = _mm256_mul_pd(v, cr);
    const __m256d t2 = _mm256_mul_pd(_mm256_permute_pd(v, 0b0101), ci);
    return _mm256_addsub_pd(t1, t2);
}

void apply_single_qubit_avx2(std::complex<double> *amps, std::size_t n,
                             std::size_t stride,
                             const std::complex<double> *m) {
    if (stride < 2) {
        scalar_kernels().apply_single_qubit(amps, n, stride, m);
        return;
    }
    auto *raw = reinterpret_cast<double *>(amps);
    const __m256d m00r = _mm256_set1_pd(m[0].real());
    const __m256d m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real());
    const __m256d m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real());
    const __m256d m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real());
    const __m256d m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; off += 2) {
            double *p0 = raw + 2 * (base + off);
            double *p1 = p0 + 2 * stride;
            const __m256d v0 = _mm256_loadu_pd(p0);
            const __m256d v1 = _mm256_loadu_pd(p1);
            _mm256_storeu_pd(p0, _mm256_add_pd(cmul(v0, m00r, m00i),
                                               cmul(v1, m01r, m01i)));
            _mm256_storeu_pd(p1, _mm256_add_pd(cmul(v0, m10r, m10i),
                                               cmul(v1, m11r, m11i)));
        }
    }
}

const KernelTable kAvx2Table{
    "avx2",
    sum_squares_avx2,
    scale_avx2,
    duplicate_adjacent_avx2,
    butterfly_pairs_avx2,
    gather_odd_avx2,
    apply_single_qubit_avx2,
};

} // namespace

const KernelTable *avx2_kernels() {
    static const KernelTable *table =
        __builtin_cpu_supports("avx2") ? &kAvx2Table : nullptr;
    return table;
}

} // namespace qhed::kernels

#else // !__AVX2__

namespace qhed::kernels {
const KernelTable *avx2_kernels() { return nullptr; }
} // namespace qhed::kernels

#endif
