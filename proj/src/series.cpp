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

#include "qhed/series.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

namespace qhed {

TimeSeries::TimeSeries(std::vector<Volume> frames_)
    : frames(std::move(frames_)) {
    if (frames.empty()) {
        throw std::invalid_argument("TimeSeries: need at least one frame");
    }
    for (std::size_t t = 0; t < frames.size(); ++t) {
        if (frames[t].dims != frames[0].dims) {
            throw std::invalid_argument(
                "TimeSeries: all frames must share the same dimensions");
        }
        if (t > 0 && frames[t].time_stamp <= frames[t - 1].time_stamp) {
            throw std::invalid_argument(
                "TimeSeries: time stamps must be strictly increasing");
        }
    }
}

namespace {

struct FrameResult {
    EdgeVector edges{{}, 0, {}};
    BoundaryMask mask;
    std::exception_ptr error;
};

FrameResult process_frame(const Volume &frame,
                          const PipelineOptions &options) {
    FrameResult result;
    try {
        auto [coeffs, meta] = encode_coefficients(frame);
        result.edges = edge_detect(coeffs, meta, frame.time_stamp);
        if (options.rescale_by_norm) {
            for (double &c : result.edges.coefficients) {
                c *= meta.norm_factor;
            }
        }
        result.mask = boundary_mask(result.edges, options.epsilon,
                                    options.drop_wraparound);
    } catch (...) {
        result.error = std::current_exception();
    }
    return result;
}

} // namespace

EdgeSeries process_series(const TimeSeries &series,
                          const PipelineOptions &options) {
    if (options.epsilon < 0.0) {
        throw std::invalid_argument("process_series: epsilon must be >= 0");
    }
    const std::size_t count = series.frames.size();
    std::vector<FrameResult> results(count);

    std::size_t workers = options.parallel
                              ? std::min<std::size_t>(
                                    std::thread::hardware_concurrency(), count)
                              : 1;
    if (workers <= 1) {
        for (std::size_t t = 0; t < count; ++t) {
            results[t] = process_frame(series.frames[t], options);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < count; t += workers) {
                    results[t] = process_frame(series.frames[t], options);
                }
            });
        }
    }

    // Report the earliest failing frame so parallel runs match sequential.
    for (const FrameResult &r : results) {
        if (r.error) {
            std::rethrow_exception(r.error);
        }
    }

    EdgeSeries out;
    out.entries.reserve(count);
    out.masks.reserve(count);
    for (FrameResult &r : results) {
        out.entries.push_back(std::move(r.edges));
        out.masks.push_back(std::move(r.mask));
    }
    return out;
}

std::vector<double> aggregate_average(const EdgeSeries &series) {
    if (series.entries.empty()) {
        throw std::invalid_argument("aggregate_average: empty series");
    }
    const std::size_t p = series.entries[0].coefficients.size();
    for (const EdgeVector &edges : series.entries) {
        if (edges.coefficients.size() != p) {
            throw std::invalid_argument(
                "aggregate_average: ragged edge vectors");
        }
    }
    // Running mean: identical frames contribute exact-zero updates, so
    // averaging them reproduces the common vector bit for bit.
    std::vector<double> mean = series.entries[0].coefficients;
    for (std::size_t t = 1; t < series.entries.size(); ++t) {
        const auto &coeffs = series.entries[t].coefficients;
        const double inv_count = 1.0 / static_cast<double>(t + 1);
        for (std::size_t j = 0; j < p; ++j) {
            mean[j] += (coeffs[j] - mean[j]) * inv_count;
        }
    }
    return mean;
}

BoundaryMask aggregate_mode(std::span<const BoundaryMask> masks,
                            ModePreference prefer) {
    if (masks.empty()) {
        throw std::invalid_argument("aggregate_mode: empty mask list");
    }
    const std::size_t p = masks[0].bits.size();
    for (const BoundaryMask &mask : masks) {
        if (mask.bits.size() != p) {
            throw std::invalid_argument("aggregate_mode: ragged masks");
        }
        if (mask.epsilon != masks[0].epsilon) {
            throw std::invalid_argument(
                "aggregate_mode: masks built with different epsilons");
        }
    }
    std::vector<std::uint8_t> bits(p, 0);
    for (std::size_t j = 0; j < p; ++j) {
        std::size_t ones = 0;
        for (const BoundaryMask &mask : masks) {
            ones += mask.bits[j];
        }
        const std::size_t zeros = masks.size() - ones;
        bool value = false;
        if (ones != zeros) { // ties resolve to no boundary
            if (ones == 0 || zeros == 0) {
                value = ones > 0; // only one value occurs
            } else if (prefer == ModePreference::most) {
                value = ones > zeros;
            } else {
                value = ones < zeros;
            }
        }
        bits[j] = value ? 1 : 0;
    }
    return {std::move(bits), masks[0].epsilon, masks[0].wraparound_removed};
}

} // namespace qhed
