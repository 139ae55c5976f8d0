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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhed {

// Precondition violations throw std::invalid_argument. The types below cover
// the failure modes that callers (notably the CLI) need to tell apart.

/// Input file could not be parsed. Carries the source name and 1-based line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string source, std::size_t line, const std::string &what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                             what),
          source_(std::move(source)), line_(line) {}

    [[nodiscard]] const std::string &source() const noexcept {
        return source_;
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::string source_;
    std::size_t line_;
};

/// Data that is structurally valid but mathematically unusable,
/// e.g. an all-zero volume whose normalization is undefined.
class DegenerateInputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Request exceeds the configured memory/size budget.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver failed to make progress.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qhed
