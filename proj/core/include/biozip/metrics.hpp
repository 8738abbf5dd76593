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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "biozip/config.hpp"

namespace biozip {

/// sqrt(sum (x_i - y_i)^2 / N). Throws on length mismatch or empty input.
double rmse(std::span<const double> original, std::span<const double> recovered);

/// (original - compressed) / original * 100. Negative when data expands.
double compression_ratio(std::uint64_t original_bytes,
                         std::uint64_t compressed_bytes);

struct TimeTotals {
  double t_comp = 0.0;     // lossy + thr + lossless
  double t_reconst = 0.0;  // ilossless + ilossy
  double t_total = 0.0;    // t_comp + t_reconst
};

TimeTotals total_time(const StageTimings& timings) noexcept;

/// Bytes a signal occupies uncompressed: 8 per binary64 sample.
constexpr std::uint64_t original_size_bytes(std::size_t sample_count) noexcept {
  return 8u * static_cast<std::uint64_t>(sample_count);
}

struct RunReport {
  PipelineConfig config;
  double rmse_std = 0.0;  // standardized domain
  double rmse_raw = 0.0;  // input units
  double cr_percent = 0.0;
  double t_comp = 0.0;
  double t_reconst = 0.0;
  double t_total = 0.0;
  /// Largest per-segment mean stage time; the shortest usable segment period.
  double t_min = 0.0;
  StageTimings timings;  // summed over segments
  std::size_t segment_size = 0;
  std::size_t retained_coefficients = 0;
  std::uint64_t compressed_bytes = 0;
  std::uint64_t original_bytes = 0;
};

}  // namespace biozip
