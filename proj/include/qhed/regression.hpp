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

#include <filesystem>
#include <istream>
#include <span>
#include <vector>

namespace qhed {

/// Linear model h(x) = theta_0 + theta_1 x_1 + ... + theta_n x_n,
/// parameters stored bias first.
struct RegressionModel {
    std::vector<double> theta;

    explicit RegressionModel(std::vector<double> theta_);
};

/// m samples of n features each, with one target per sample.
struct TrainingSet {
    std::vector<std::vector<double>> features;
    std::vector<double> targets;

    TrainingSet(std::vector<std::vector<double>> features_,
                std::vector<double> targets_);

    [[nodiscard]] std::size_t sample_count() const noexcept {
        return targets.size();
    }
    [[nodiscard]] std::size_t feature_count() const noexcept {
        return features.empty() ? 0 : features[0].size();
    }
};

/// CSV rows of numbers, features first, target in the last column.
TrainingSet load_training_csv(std::istream &in,
                              const std::string &source_name);
TrainingSet load_training_csv(const std::filesystem::path &path);

/// theta_0 + sum_i theta_i x_i. x must have theta.size() - 1 entries.
double hypothesis(const RegressionModel &model, std::span<const double> x);

/// Mean halved squared error (1/2m) sum (h(x_i) - y_i)^2.
double cost(const RegressionModel &model, const TrainingSet &data);

/// Gradient of cost with respect to theta.
std::vector<double> cost_gradient(const RegressionModel &model,
                                  const TrainingSet &data);

/// Full-batch gradient descent with a fixed step, starting from theta = 0.
/// Raises ConvergenceError if the cost rises for 10 consecutive iterations.
RegressionModel fit_linear(const TrainingSet &data, double learning_rate,
                           std::size_t iterations);

/// The direct boundary computation the quantum transform is checked
/// against: ((c_j - c_{(j+1) mod P}) / sqrt2)_j as a plain loop.
std::vector<double> classical_edge_oracle(std::span<const double> coeffs);

} // namespace qhed
