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

// Parameter sweeps over (transform, codec) x segment count x threshold.

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "biozip/metrics.hpp"
#include "biozip/signal_io.hpp"

namespace biozip::cli {

struct CodecPair {
  TransformKind transform = TransformKind::kDct;
  CodecKind codec = CodecKind::kRle;
};

inline constexpr double kDefaultThrMin = 0.005;
inline constexpr double kDefaultThrMax = 0.05;
inline constexpr std::size_t kDefaultThrCount = 12;

/// `count` points from lo to hi inclusive, geometric unless `linear`.
std::vector<double> threshold_grid(double lo, double hi, std::size_t count, bool linear = false);

/// DCT/RLE, DCT/ARITH, DWT/RLE, DWT/ARITH.
std::vector<CodecPair> all_codec_pairs();

struct SweepSpec {
  std::vector<double> thresholds = threshold_grid(kDefaultThrMin, kDefaultThrMax, kDefaultThrCount);
  std::vector<std::size_t> segment_counts{1};
  std::vector<CodecPair> configs = all_codec_pairs();
  int dwt_levels = 1;
  unsigned threads = 1;

  /// Throws kInvalidArgument on empty lists or thresholds outside [0, 1].
  void validate() const;
};

struct SweepRow {
  PipelineConfig config;
  RunReport report;  // meaningful only when error is empty
  std::string error;
};

/// Rows are ordered by config, then segment count, then threshold, each in
/// the order given. A failing run becomes a row with `error` set.
std::vector<SweepRow> run_sweep(const RawSignal& signal, const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace biozip::cli
