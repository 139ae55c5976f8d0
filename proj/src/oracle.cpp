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

#include "qhed/oracle.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qhed/circuit.hpp"
#include "qhed/errors.hpp"

namespace qhed {

namespace {

constexpr std::size_t kMaxDenseOracleQubits = 10;
constexpr std::size_t kMaxSimulatedQubits = 24;

} // namespace

BooleanFunction::BooleanFunction(std::size_t input_bits_,
                                 std::size_t output_bits_,
                                 std::vector<std::uint64_t> table_)
    : input_bits(input_bits_), output_bits(output_bits_),
      table(std::move(table_)) {
    if (input_bits < 1 || input_bits > 32) {
        throw std::invalid_argument(
            "BooleanFunction: input bit count must be in [1, 32]");
    }
    if (output_bits < 1 || output_bits > 32) {
        throw std::invalid_argument(
            "BooleanFunction: output bit count must be in [1, 32]");
    }
    if (table.size() != (std::size_t{1} << input_bits)) {
        throw std::invalid_argument(
            "BooleanFunction: table must have 2^m entries");
    }
    const std::uint64_t limit = std::uint64_t{1} << output_bits;
    for (std::uint64_t value : table) {
        if (value >= limit) {
            throw std::invalid_argument(
                "BooleanFunction: table entry does not fit in k bits");
        }
    }
}

BooleanFunction load_truth_table(std::istream &in,
                                 const std::string &source_name) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError(source_name, 1, "empty truth-table file");
    }
    ++line_no;
    std::istringstream header(line);
    std::size_t m = 0;
    std::size_t k = 0;
    std::string extra;
    if (!(header >> m >> k) || (header >> extra)) {
        throw ParseError(source_name, line_no,
                         "expected header 'm k' with two integers");
    }
    if (m < 1 || m > 24 || k < 1 || k > 24) {
        throw ParseError(source_name, line_no,
                         "bit counts must be in [1, 24]");
    }
    const std::size_t rows = std::size_t{1} << m;
    std::vector<std::uint64_t> table;
    table.reserve(rows);
    while (table.size() < rows) {
        if (!std::getline(in, line)) {
            throw ParseError(source_name, line_no,
                             "expected " + std::to_string(rows) +
                                 " table rows, got " +
                                 std::to_string(table.size()));
        }
        ++line_no;
        std::istringstream row(line);
        std::uint64_t value = 0;
        if (!(row >> value) || (row >> extra)) {
            throw ParseError(source_name, line_no,
                             "expected one output integer");
        }
        if (value >= (std::uint64_t{1} << k)) {
            throw ParseError(source_name, line_no,
                             "output value does not fit in " +
                                 std::to_string(k) + " bits");
        }
        table.push_back(value);
    }
    return {m, k, std::move(table)};
}

BooleanFunction load_truth_table(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
    }
    return load_truth_table(in, path.string());
}

std::vector<std::size_t> oracle_permutation(const BooleanFunction &f) {
    const std::size_t k = f.output_bits;
    const std::size_t size = std::size_t{1}
                             << (f.input_bits + f.output_bits);
    const std::size_t y_mask = (std::size_t{1} << k) - 1;
    std::vector<std::size_t> perm(size);
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t x = i >> k;
        const std::size_t y = i & y_mask;
        perm[i] = (x << k) | (y ^ static_cast<std::size_t>(f.table[x]));
    }
    return perm;
}

Gate build_oracle(const BooleanFunction &f) {
    const std::size_t arity = f.input_bits + f.output_bits;
    if (arity > kMaxDenseOracleQubits) {
        throw ResourceError(
            "build_oracle: dense matrix limited to " +
            std::to_string(kMaxDenseOracleQubits) +
            " qubits; use apply_oracle for larger registers");
    }
    const std::vector<std::size_t> perm = oracle_permutation(f);
    const std::size_t dim = perm.size();
    std::vector<Amplitude> matrix(dim * dim, Amplitude{0.0, 0.0});
    for (std::size_t col = 0; col < dim; ++col) {
        matrix[perm[col] * dim + col] = Amplitude{1.0, 0.0};
    }
    return {arity, std::move(matrix)};
}

StateVector apply_oracle(const StateVector &state, const BooleanFunction &f) {
    const std::size_t arity = f.input_bits + f.output_bits;
    if (state.num_qubits() != arity) {
        throw std::invalid_argument(
            "apply_oracle: register must have exactly m + k qubits");
    }
    const std::vector<std::size_t> perm = oracle_permutation(f);
    std::vector<Amplitude> out(state.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out[perm[i]] = state[i];
    }
    return {arity, std::move(out)};
}

StateVector parallel_evaluate(const BooleanFunction &f) {
    const std::size_t arity = f.input_bits + f.output_bits;
    if (arity > kMaxSimulatedQubits) {
        throw ResourceError("parallel_evaluate: register of " +
                            std::to_string(arity) + " qubits exceeds the " +
                            std::to_string(kMaxSimulatedQubits) +
                            "-qubit simulation budget");
    }
    const Gate h = standard_gate("H");
    StateVector state = basis_state(arity, 0);
    for (std::size_t q = 0; q < f.input_bits; ++q) {
        state = apply_unitary(state, h, {q});
    }
    return apply_oracle(state, f);
}

} // namespace qhed
