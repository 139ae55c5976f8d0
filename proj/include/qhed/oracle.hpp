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
#include <filesystem>
#include <istream>
#include <vector>

#include "qhed/gates.hpp"
#include "qhed/state.hpp"

namespace qhed {

/// Truth table of f: {0,1}^m -> {0,1}^k, indexed by the m-bit input read
/// as an integer. table[x] < 2^k for every x.
struct BooleanFunction {
    std::size_t input_bits;
    std::size_t output_bits;
    std::vector<std::uint64_t> table;

    BooleanFunction(std::size_t input_bits_, std::size_t output_bits_,
                    std::vector<std::uint64_t> table_);
};

/// Parses the text format: first line "m k", then 2^m lines holding one
/// output integer each, in input-index order. Throws ParseError.
BooleanFunction load_truth_table(std::istream &in,
                                 const std::string &source_name);
BooleanFunction load_truth_table(const std::filesystem::path &path);

/// The reversible embedding of f as a basis-state permutation:
/// result[x*2^k + y] = x*2^k + (y XOR f(x)). Input bits are the high-order
/// qubits, outputs the low-order ones, matching ket order |x, y>.
std::vector<std::size_t> oracle_permutation(const BooleanFunction &f);

/// Dense permutation-matrix Gate of arity m + k realizing
/// |x, y> -> |x, y XOR f(x)>. Guarded to m + k <= 10 (the dense matrix is
/// quadratic in the state size); use apply_oracle beyond that.
Gate build_oracle(const BooleanFunction &f);

/// Applies the oracle to a state on exactly m + k qubits in O(2^(m+k)),
/// without materializing the matrix.
StateVector apply_oracle(const StateVector &state, const BooleanFunction &f);

/// Evaluates f on every input at once: from |0...0>, puts the m input
/// qubits into uniform superposition with Hadamards, then applies the
/// oracle, producing 2^(-m/2) * sum_x |x, f(x)>.
/// Requires m + k <= 24 (ResourceError beyond).
StateVector parallel_evaluate(const BooleanFunction &f);

} // namespace qhed
