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
#include <span>
#include <vector>

namespace biozip {

struct StandardizationParams {
  double mu = 0.0;
  double sigma = 1.0;  // population standard deviation, > 0

  bool valid() const noexcept;
  friend bool operator==(const StandardizationParams&,
                         const StandardizationParams&) = default;
};

struct StandardizedSignal {
  std::vector<double> values;
  StandardizationParams params;
};

/// (x - mean) / population_std over the whole input.
/// Throws kInvalidArgument for fewer than two samples and kDegenerateInput
/// when the input is constant.
StandardizedSignal standardize(std::span<const double> samples);

/// Inverse map y * sigma + mu.
std::vector<double> destandardize(std::span<const double> standardized,
                                  const StandardizationParams& params);

struct StandardizedSegment {
  std::vector<double> data;
  std::size_t segment_index = 0;
  std::size_t original_offset = 0;
};

/// Splits into exactly `num_segments` contiguous pieces of floor(L / N)
/// samples; the last piece also takes the L mod N leftover samples.
std::vector<StandardizedSegment> segment(std::span<const double> standardized,
                                         std::size_t num_segments);

/// Segment count that yields one segment every `ts_seconds` of signal:
/// max(1, floor(total / round(ts * rate))).
std::size_t segments_for_sampling_time(double sample_rate,
                                       std::size_t total_samples,
                                       double ts_seconds);

}  // namespace biozip
