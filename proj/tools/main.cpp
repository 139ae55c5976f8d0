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

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhed/circuit.hpp"
#include "qhed/errors.hpp"
#include "qhed/oracle.hpp"
#include "qhed/regression.hpp"
#include "qhed/report.hpp"
#include "qhed/series.hpp"

namespace {

// Exit codes: 0 success, 2 usage or parse failure, 3 degenerate data,
// 4 internal invariant violation.
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInternal = 4;

struct GhzArgs {
    std::size_t n = 3;
};

struct OracleArgs {
    std::string table_file;
};

struct EdgesArgs {
    std::vector<std::string> volume_files;
    qhed::RunConfig config;
    bool keep_wraparound = false;
    bool binary = false;
};

struct FitArgs {
    std::string csv_file;
    double rate = 0.1;
    std::size_t iterations = 10000;
};

int run_ghz(const GhzArgs &args) {
    std::cout << qhed::format_nonzero_amplitudes(qhed::ghz_state(args.n));
    return 0;
}

int run_oracle(const OracleArgs &args) {
    const qhed::BooleanFunction f = qhed::load_truth_table(args.table_file);
    if (f.input_bits + f.output_bits > 24) {
        std::cerr << "error: truth table needs "
                  << f.input_bits + f.output_bits
                  << " qubits, more than the 24-qubit budget\n";
        return kExitUsage;
    }
    std::cout << qhed::format_nonzero_amplitudes(qhed::parallel_evaluate(f));
    return 0;
}

int run_edges(const EdgesArgs &args) {
    std::vector<qhed::Volume> frames;
    frames.reserve(args.volume_files.size());
    for (const std::string &file : args.volume_files) {
        frames.push_back(args.binary ? qhed::load_volume_binary(file)
                                     : qhed::load_volume_text(file));
    }
    std::stable_sort(frames.begin(), frames.end(),
                     [](const qhed::Volume &a, const qhed::Volume &b) {
                         return a.time_stamp < b.time_stamp;
                     });
    qhed::RunConfig config = args.config;
    config.drop_wraparound = !args.keep_wraparound;
    const qhed::TimeSeries series(std::move(frames));
    const qhed::EdgeSeries processed = qhed::process_series(
        series, {config.epsilon, config.drop_wraparound,
                 config.rescale_by_norm, /*parallel=*/true});
    const qhed::AggregateResult aggregate =
        qhed::run_aggregation(processed, config);
    std::cout << qhed::render_report(processed, aggregate, config) << '\n';
    return 0;
}

int run_fit(const FitArgs &args) {
    const qhed::TrainingSet data = qhed::load_training_csv(args.csv_file);
    const qhed::RegressionModel model =
        qhed::fit_linear(data, args.rate, args.iterations);
    for (std::size_t j = 0; j < model.theta.size(); ++j) {
        std::cout << "theta[" << j
                  << "] = " << qhed::format_double(model.theta[j]) << '\n';
    }
    std::cout << "cost = " << qhed::format_double(qhed::cost(model, data))
              << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Hadamard edge detection over time-stamped volumes, "
                 "with a small state-vector simulator"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    GhzArgs ghz_args;
    auto *ghz = app.add_subcommand(
        "ghz", "Prepare the n-qubit GHZ state and print its amplitudes");
    ghz->add_option("n", ghz_args.n, "Register width")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{24}));

    OracleArgs oracle_args;
    auto *oracle = app.add_subcommand(
        "oracle", "Evaluate a boolean function on all inputs at once and "
                  "print the resulting superposition");
    oracle
        ->add_option("table", oracle_args.table_file,
                     "Truth-table file: line 1 'm k', then 2^m output "
                     "integers, one per line")
        ->required();

    EdgesArgs edges_args;
    auto *edges = app.add_subcommand(
        "edges", "Detect boundaries in one or more volume frames and emit a "
                 "machine-readable report");
    edges
        ->add_option("volumes", edges_args.volume_files,
                     "Volume files, one frame each")
        ->required();
    edges->add_option("--epsilon", edges_args.config.epsilon,
                      "Boundary threshold on |difference| (default 1e-9)")
        ->check(CLI::NonNegativeNumber);
    edges->add_flag("--keep-wraparound", edges_args.keep_wraparound,
                    "Keep difference terms that straddle column/slab/padding "
                    "seams instead of masking them");
    const std::map<std::string, qhed::Aggregation> aggregation_names{
        {"none", qhed::Aggregation::none},
        {"average", qhed::Aggregation::average},
        {"mode-most", qhed::Aggregation::mode_most},
        {"mode-least", qhed::Aggregation::mode_least}};
    edges
        ->add_option("--aggregate", edges_args.config.aggregation,
                     "Combine frames: average the difference coefficients, "
                     "or per-position majority (mode-most) / minority "
                     "(mode-least) vote over boundary masks. Averaging suits "
                     "soft images sampled over a short time span.")
        ->transform(CLI::CheckedTransformer(aggregation_names))
        ->default_str("none");
    edges->add_flag("--rescale-by-norm", edges_args.config.rescale_by_norm,
                    "Undo per-frame normalization before masking and "
                    "aggregation so frames are on a common intensity scale");
    const std::map<std::string, qhed::ReportFormat> format_names{
        {"json", qhed::ReportFormat::json}, {"csv", qhed::ReportFormat::csv}};
    edges->add_option("--format", edges_args.config.format, "Report format")
        ->transform(CLI::CheckedTransformer(format_names))
        ->default_str("json");
    edges->add_flag("--binary", edges_args.binary,
                    "Volumes are in the binary format");

    FitArgs fit_args;
    auto *fit = app.add_subcommand(
        "fit", "Fit a linear model by gradient descent on a CSV of samples "
               "(features first, target last)");
    fit->add_option("csv", fit_args.csv_file, "Training data")->required();
    fit->add_option("--rate", fit_args.rate, "Learning rate (default 0.1)")
        ->check(CLI::PositiveNumber);
    fit->add_option("--iterations", fit_args.iterations,
                    "Gradient-descent steps (default 10000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (ghz->parsed()) {
            return run_ghz(ghz_args);
        }
        if (oracle->parsed()) {
            return run_oracle(oracle_args);
        }
        if (edges->parsed()) {
            return run_edges(edges_args);
        }
        if (fit->parsed()) {
            return run_fit(fit_args);
        }
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const qhed::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qhed::ResourceError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qhed::DegenerateInputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const qhed::ConvergenceError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
