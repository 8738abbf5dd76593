// Copyright 2026 The biozip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end codec.
//
// compress:   standardize -> segment -> per segment
//             (transform -> threshold -> entropy encode) -> container
// decompress: per segment (entropy decode -> inverse transform -> trim pad)
//             -> concatenate -> destandardize
//
// Stage timings are measured per segment with a monotonic clock and summed.
// Segments may be processed on several threads; results are gathered by
// segment index, so the container bytes are independent of the thread count.

#pragma once

#include <cstddef>
#include <vector>

#include "biozip/config.hpp"
#include "biozip/container.hpp"
#include "biozip/metrics.hpp"
#include "biozip/signal_io.hpp"

namespace biozip {

struct CompressResult {
  CompressedFile file;
  StageTimings timings;  // t_lossy, t_thr, t_lossless
  std::size_t retained_coefficients = 0;
};

CompressResult compress(const RawSignal& signal, const PipelineConfig& config);

struct DecompressResult {
  RawSignal signal;
  /// Reconstruction before destandardization.
  std::vector<double> standardized;
  StageTimings timings;  // t_ilossless, t_ilossy
};

/// Throws kMalformedPayload (naming the segment) when a payload fails to
/// decode or reconstructs to non-finite values, and kInvalidHeader when the
/// stored mu and sigma overflow the output.
DecompressResult decompress(const CompressedFile& file, unsigned threads = 1);

struct Feasibility {
  bool feasible = false;
  double t_min = 0.0;
};

/// t_min is the largest of the five stage times; a segment period ts is
/// feasible when ts >= t_min. Pass per-segment mean timings.
Feasibility check_realtime_feasibility(const StageTimings& timings,
                                       double ts_seconds) noexcept;

/// Compresses, decompresses and measures one configuration. The serialized
/// container is handed back through `container` when it is non-null.
RunReport evaluate(const RawSignal& signal, const PipelineConfig& config,
                   std::vector<std::uint8_t>* container = nullptr);

}  // namespace biozip
