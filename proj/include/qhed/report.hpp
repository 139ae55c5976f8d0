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

#include <string>

#include "qhed/series.hpp"
#include "qhed/state.hpp"

namespace qhed {

enum class Aggregation { none, average, mode_most, mode_least };
enum class ReportFormat { json, csv };

/// Knobs of one edge-detection run; every field maps onto a CLI flag.
struct RunConfig {
    double epsilon = 1e-9;
    bool drop_wraparound = true;
    Aggregation aggregation = Aggregation::none;
    bool rescale_by_norm = false;
    ReportFormat format = ReportFormat::json;
};

/// Outcome of the configured aggregation over a processed series.
/// average fills coefficients and their thresholded mask; the mode kinds
/// fill only the mask; none leaves both empty.
struct AggregateResult {
    Aggregation kind = Aggregation::none;
    std::vector<double> coefficients;
    std::vector<std::uint8_t> mask;
};

AggregateResult run_aggregation(const EdgeSeries &series,
                                const RunConfig &config);

/// Shortest text that round-trips a double (17 significant digits).
std::string format_double(double value);

/// Renders the machine-readable report. JSON shape:
/// {"frames":[{"time":..., "edges":[...], "mask":[...]}, ...],
///  "aggregate":{...}, "meta":{...}}
/// CSV columns: record,time,position,coefficient,boundary.
/// Identical inputs produce byte-identical output.
std::string render_report(const EdgeSeries &series,
                          const AggregateResult &aggregate,
                          const RunConfig &config);

/// One line per nonzero amplitude: "|bits> value", basis labels with
/// qubit 0 leftmost.
std::string format_nonzero_amplitudes(const StateVector &state);

} // namespace qhed
