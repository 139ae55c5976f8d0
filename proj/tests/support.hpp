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

// Test-only reference computations, written independently of the library
// paths they validate: brute-force state evolution by column enumeration,
// a normal-equations solver, and plain random generators.

#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "qhed/gates.hpp"
#include "qhed/state.hpp"

namespace qhed::test {

inline std::mt19937 rng(std::uint32_t seed) { return std::mt19937{seed}; }

inline std::vector<double> random_reals(std::mt19937 &gen, std::size_t n,
                                        double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(n);
    for (double &v : out) {
        v = dist(gen);
    }
    return out;
}

inline std::vector<Amplitude> random_amplitudes(std::mt19937 &gen,
                                                std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Amplitude> out(n);
    for (Amplitude &a : out) {
        a = {dist(gen), dist(gen)};
    }
    return out;
}

inline StateVector random_unit_state(std::mt19937 &gen,
                                     std::size_t num_qubits) {
    auto amps = random_amplitudes(gen, std::size_t{1} << num_qubits);
    double norm_sq = 0.0;
    for (const Amplitude &a : amps) {
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Amplitude &a : amps) {
        a *= inv;
    }
    return {num_qubits, std::move(amps)};
}

// Applies a gate to chosen qubits by explicit per-basis-state bit surgery,
// the textbook definition rather than the strided kernels.
inline std::vector<Amplitude>
reference_apply(const std::vector<Amplitude> &amps, std::size_t num_qubits,
                const Gate &gate, const std::vector<std::size_t> &targets) {
    const std::size_t a = gate.arity;
    std::vector<Amplitude> out(amps.size(), Amplitude{0.0, 0.0});
    for (std::size_t col = 0; col < amps.size(); ++col) {
        // Local pattern of this basis state on the target qubits.
        std::size_t local = 0;
        for (std::size_t j = 0; j < a; ++j) {
            const std::size_t bit =
                (col >> (num_qubits - 1 - targets[j])) & 1U;
            local |= bit << (a - 1 - j);
        }
        for (std::size_t row_local = 0; row_local < gate.dim(); ++row_local) {
            const Amplitude entry = gate.at(row_local, local);
            if (entry == Amplitude{0.0, 0.0}) {
                continue;
            }
            std::size_t row = col;
            for (std::size_t j = 0; j < a; ++j) {
                const std::size_t pos = num_qubits - 1 - targets[j];
                const std::size_t bit = (row_local >> (a - 1 - j)) & 1U;
                row = (row & ~(std::size_t{1} << pos)) | (bit << pos);
            }
            out[row] += entry * amps[col];
        }
    }
    return out;
}

// Least squares through the normal equations (X^T X) theta = X^T y with a
// leading all-ones column, solved by Gaussian elimination with partial
// pivoting. Oracle for the gradient-descent fitter.
inline std::vector<double>
normal_equations_fit(const std::vector<std::vector<double>> &features,
                     const std::vector<double> &targets) {
    const std::size_t m = targets.size();
    const std::size_t w = features.empty() ? 1 : features[0].size() + 1;
    std::vector<std::vector<double>> ata(w, std::vector<double>(w, 0.0));
    std::vector<double> aty(w, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> row(w, 1.0);
        for (std::size_t j = 1; j < w; ++j) {
            row[j] = features[i][j - 1];
        }
        for (std::size_t r = 0; r < w; ++r) {
            for (std::size_t c = 0; c < w; ++c) {
                ata[r][c] += row[r] * row[c];
            }
            aty[r] += row[r] * targets[i];
        }
    }
    for (std::size_t col = 0; col < w; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < w; ++r) {
            if (std::abs(ata[r][col]) > std::abs(ata[pivot][col])) {
                pivot = r;
            }
        }
        if (ata[pivot][col] == 0.0) {
            throw std::runtime_error("normal_equations_fit: singular system");
        }
        std::swap(ata[col], ata[pivot]);
        std::swap(aty[col], aty[pivot]);
        for (std::size_t r = 0; r < w; ++r) {
            if (r == col) {
                continue;
            }
            const double f = ata[r][col] / ata[col][col];
            for (std::size_t c = col; c < w; ++c) {
                ata[r][c] -= f * ata[col][c];
            }
            aty[r] -= f * aty[col];
        }
    }
    std::vector<double> theta(w);
    for (std::size_t j = 0; j < w; ++j) {
        theta[j] = aty[j] / ata[j][j];
    }
    return theta;
}

} // namespace qhed::test
