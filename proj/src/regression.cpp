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

#include "qhed/regression.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qhed/errors.hpp"

namespace qhed {

RegressionModel::RegressionModel(std::vector<double> theta_)
    : theta(std::move(theta_)) {
    if (theta.empty()) {
        throw std::invalid_argument(
            "RegressionModel: need at least the bias parameter");
    }
    for (double v : theta) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(
                "RegressionModel: parameters must be finite");
        }
    }
}

TrainingSet::TrainingSet(std::vector<std::vector<double>> features_,
                         std::vector<double> targets_)
    : features(std::move(features_)), targets(std::move(targets_)) {
    if (targets.empty() || features.size() != targets.size()) {
        throw std::invalid_argument(
            "TrainingSet: need one target per sample, at least one sample");
    }
    for (const auto &row : features) {
        if (row.size() != features[0].size()) {
            throw std::invalid_argument("TrainingSet: ragged feature rows");
        }
    }
}

TrainingSet load_training_csv(std::istream &in,
                              const std::string &source_name) {
    std::vector<std::vector<double>> features;
    std::vector<double> targets;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(cell, &used);
                while (used < cell.size() &&
                       (cell[used] == ' ' || cell[used] == '\r')) {
                    ++used;
                }
                if (used != cell.size()) {
                    throw std::invalid_argument(cell);
                }
                row.push_back(v);
            } catch (const std::exception &) {
                throw ParseError(source_name, line_no,
                                 "invalid number '" + cell + "'");
            }
        }
        if (row.empty()) {
            throw ParseError(source_name, line_no, "empty row");
        }
        if (!features.empty() && row.size() != features[0].size() + 1) {
            throw ParseError(source_name, line_no,
                             "row width differs from previous rows");
        }
        targets.push_back(row.back());
        row.pop_back();
        features.push_back(std::move(row));
    }
    if (targets.empty()) {
        throw ParseError(source_name, line_no ? line_no : 1,
                         "no samples in file");
    }
    return {std::move(features), std::move(targets)};
}

TrainingSet load_training_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
    }
    return load_training_csv(in, path.string());
}

double hypothesis(const RegressionModel &model, std::span<const double> x) {
    if (x.size() + 1 != model.theta.size()) {
        throw std::invalid_argument(
            "hypothesis: feature width must be theta count - 1");
    }
    double value = model.theta[0];
    for (std::size_t i = 0; i < x.size(); ++i) {
        value += model.theta[i + 1] * x[i];
    }
    return value;
}

double cost(const RegressionModel &model, const TrainingSet &data) {
    if (data.feature_count() + 1 != model.theta.size()) {
        throw std::invalid_argument(
            "cost: model width does not match training data");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < data.sample_count(); ++i) {
        const double r = hypothesis(model, data.features[i]) - data.targets[i];
        total += r * r;
    }
    return total / (2.0 * static_cast<double>(data.sample_count()));
}

std::vector<double> cost_gradient(const RegressionModel &model,
                                  const TrainingSet &data) {
    if (data.feature_count() + 1 != model.theta.size()) {
        throw std::invalid_argument(
            "cost_gradient: model width does not match training data");
    }
    std::vector<double> grad(model.theta.size(), 0.0);
    for (std::size_t i = 0; i < data.sample_count(); ++i) {
        const double r = hypothesis(model, data.features[i]) - data.targets[i];
        grad[0] += r;
        for (std::size_t j = 0; j < data.feature_count(); ++j) {
            grad[j + 1] += r * data.features[i][j];
        }
    }
    const double inv = 1.0 / static_cast<double>(data.sample_count());
    for (double &g : grad) {
        g *= inv;
    }
    return grad;
}

RegressionModel fit_linear(const TrainingSet &data, double learning_rate,
                           std::size_t iterations) {
    if (learning_rate <= 0.0 || !std::isfinite(learning_rate)) {
        throw std::invalid_argument("fit_linear: learning rate must be > 0");
    }
    RegressionModel model(std::vector<double>(data.feature_count() + 1, 0.0));
    double previous_cost = cost(model, data);
    std::size_t rising = 0;
    for (std::size_t it = 0; it < iterations; ++it) {
        const std::vector<double> grad = cost_gradient(model, data);
        for (std::size_t j = 0; j < model.theta.size(); ++j) {
            model.theta[j] -= learning_rate * grad[j];
        }
        const double current = cost(model, data);
        if (!std::isfinite(current)) {
            throw ConvergenceError(
                "fit_linear: cost overflowed; reduce the learning rate");
        }
        rising = current > previous_cost ? rising + 1 : 0;
        if (rising >= 10) {
            throw ConvergenceError(
                "fit_linear: cost rose for 10 consecutive iterations; "
                "reduce the learning rate");
        }
        previous_cost = current;
    }
    return model;
}

std::vector<double> classical_edge_oracle(std::span<const double> coeffs) {
    if (coeffs.size() < 2) {
        throw std::invalid_argument(
            "classical_edge_oracle: need at least 2 entries");
    }
    constexpr double k = std::numbers::sqrt2 / 2.0;
    const std::size_t p = coeffs.size();
    std::vector<double> out(p);
    for (std::size_t j = 0; j < p; ++j) {
        out[j] = (coeffs[j] - coeffs[(j + 1) % p]) * k;
    }
    return out;
}

} // namespace qhed
