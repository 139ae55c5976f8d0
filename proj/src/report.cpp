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

#include "qhed/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace qhed {

namespace {

const char *aggregation_name(Aggregation kind) {
    switch (kind) {
    case Aggregation::none:
        return "none";
    case Aggregation::average:
        return "average";
    case Aggregation::mode_most:
        return "mode-most";
    case Aggregation::mode_least:
        return "mode-least";
    }
    throw std::logic_error("unreachable aggregation kind");
}

void append_double_array(std::string &out, const std::vector<double> &values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += format_double(values[i]);
    }
    out += ']';
}

void append_bool_array(std::string &out,
                       const std::vector<std::uint8_t> &bits) {
    out += '[';
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += bits[i] ? "true" : "false";
    }
    out += ']';
}

std::string render_json(const EdgeSeries &series,
                        const AggregateResult &aggregate,
                        const RunConfig &config) {
    std::string out;
    out.reserve(64 + series.entries.size() *
                         (series.entries[0].coefficients.size() * 24 + 48));
    out += "{\"frames\":[";
    for (std::size_t t = 0; t < series.entries.size(); ++t) {
        const EdgeVector &edges = series.entries[t];
        if (t) {
            out += ',';
        }
        out += "{\"time\":";
        out += std::to_string(edges.frame_time);
        out += ",\"edges\":";
        append_double_array(out, edges.coefficients);
        out += ",\"mask\":";
        append_bool_array(out, series.masks[t].bits);
        out += '}';
    }
    out += "],\"aggregate\":{\"type\":\"";
    out += aggregation_name(aggregate.kind);
    out += '"';
    if (aggregate.kind == Aggregation::average) {
        out += ",\"coefficients\":";
        append_double_array(out, aggregate.coefficients);
    }
    if (aggregate.kind != Aggregation::none) {
        out += ",\"mask\":";
        append_bool_array(out, aggregate.mask);
    }
    const EncodingMeta &meta = series.entries[0].meta;
    out += "},\"meta\":{\"dims\":[";
    out += std::to_string(meta.original_dims[0]);
    out += ',';
    out += std::to_string(meta.original_dims[1]);
    out += ',';
    out += std::to_string(meta.original_dims[2]);
    out += "],\"num_qubits\":";
    out += std::to_string(meta.num_qubits);
    out += ",\"padded_length\":";
    out += std::to_string(meta.padded_length);
    out += ",\"epsilon\":";
    out += format_double(config.epsilon);
    out += ",\"drop_wraparound\":";
    out += config.drop_wraparound ? "true" : "false";
    out += ",\"rescale_by_norm\":";
    out += config.rescale_by_norm ? "true" : "false";
    out += ",\"aggregation\":\"";
    out += aggregation_name(config.aggregation);
    out += "\",\"norm_factors\":[";
    for (std::size_t t = 0; t < series.entries.size(); ++t) {
        if (t) {
            out += ',';
        }
        out += format_double(series.entries[t].meta.norm_factor);
    }
    out += "]}}";
    return out;
}

std::string render_csv(const EdgeSeries &series,
                       const AggregateResult &aggregate) {
    std::string out = "record,time,position,coefficient,boundary\n";
    for (std::size_t t = 0; t < series.entries.size(); ++t) {
        const EdgeVector &edges = series.entries[t];
        const std::string time = std::to_string(edges.frame_time);
        for (std::size_t j = 0; j < edges.coefficients.size(); ++j) {
            out += "frame,";
            out += time;
            out += ',';
            out += std::to_string(j);
            out += ',';
            out += format_double(edges.coefficients[j]);
            out += ',';
            out += series.masks[t].bits[j] ? '1' : '0';
            out += '\n';
        }
    }
    if (aggregate.kind != Aggregation::none) {
        for (std::size_t j = 0; j < aggregate.mask.size(); ++j) {
            out += "aggregate,,";
            out += std::to_string(j);
            out += ',';
            if (aggregate.kind == Aggregation::average) {
                out += format_double(aggregate.coefficients[j]);
            }
            out += ',';
            out += aggregate.mask[j] ? '1' : '0';
            out += '\n';
        }
    }
    return out;
}

} // namespace

AggregateResult run_aggregation(const EdgeSeries &series,
                                const RunConfig &config) {
    AggregateResult result;
    result.kind = config.aggregation;
    switch (config.aggregation) {
    case Aggregation::none:
        break;
    case Aggregation::average: {
        result.coefficients = aggregate_average(series);
        const EdgeVector averaged{result.coefficients,
                                  series.entries.back().frame_time,
                                  series.entries[0].meta};
        result.mask = boundary_mask(averaged, config.epsilon,
                                    config.drop_wraparound)
                          .bits;
        break;
    }
    case Aggregation::mode_most:
        result.mask = aggregate_mode(series.masks, ModePreference::most).bits;
        break;
    case Aggregation::mode_least:
        result.mask = aggregate_mode(series.masks, ModePreference::least).bits;
        break;
    }
    return result;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string render_report(const EdgeSeries &series,
                          const AggregateResult &aggregate,
                          const RunConfig &config) {
    if (series.entries.empty()) {
        throw std::invalid_argument("render_report: empty series");
    }
    return config.format == ReportFormat::json
               ? render_json(series, aggregate, config)
               : render_csv(series, aggregate);
}

std::string format_nonzero_amplitudes(const StateVector &state) {
    std::string out;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Amplitude &a = state[i];
        if (a == Amplitude{0.0, 0.0}) {
            continue;
        }
        out += '|';
        for (std::size_t q = 0; q < state.num_qubits(); ++q) {
            out += (i >> (state.num_qubits() - 1 - q)) & 1U ? '1' : '0';
        }
        out += "⟩ ";
        out += format_double(a.real());
        if (a.imag() != 0.0) {
            if (a.imag() > 0.0) {
                out += '+';
            }
            out += format_double(a.imag());
            out += 'i';
        }
        out += '\n';
    }
    return out;
}

} // namespace qhed
