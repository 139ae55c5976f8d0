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

#include <span>
#include <vector>

#include "qhed/edge.hpp"
#include "qhed/volume.hpp"

namespace qhed {

/// Non-empty frame sequence with strictly increasing time stamps and
/// uniform dimensions.
struct TimeSeries {
    std::vector<Volume> frames;

    explicit TimeSeries(std::vector<Volume> frames_);
};

/// Per-frame pipeline output, ordered by frame time. masks[t] belongs to
/// entries[t]; all entries share the padded length P.
struct EdgeSeries {
    std::vector<EdgeVector> entries;
    std::vector<BoundaryMask> masks;
};

struct PipelineOptions {
    double epsilon = 1e-9;
    bool drop_wraparound = true;
    /// Multiply each frame's differences by its norm factor, making
    /// coefficients comparable across frames that were normalized
    /// independently. Applied before masking and aggregation.
    bool rescale_by_norm = false;
    /// Process frames on multiple threads. Frames are independent, so the
    /// result is bit-identical to the sequential order either way.
    bool parallel = true;
};

/// Runs encode + edge_detect (+ boundary_mask) on every frame.
/// Any all-zero frame raises DegenerateInputError naming its time stamp;
/// with several offenders the earliest frame is reported regardless of
/// execution order.
EdgeSeries process_series(const TimeSeries &series,
                          const PipelineOptions &options = {});

/// Component-wise arithmetic mean of the edge coefficients across frames.
std::vector<double> aggregate_average(const EdgeSeries &series);

enum class ModePreference { most, least };

/// Per position, counts 0/1 votes across masks and keeps the value
/// appearing the most (or least) often. Only values that actually occur
/// are candidates, so unanimous positions are fixed points for both
/// preferences. Ties resolve to 0 (no boundary).
BoundaryMask aggregate_mode(std::span<const BoundaryMask> masks,
                            ModePreference prefer);

} // namespace qhed
