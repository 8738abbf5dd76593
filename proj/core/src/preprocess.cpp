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

#include "biozip/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "biozip/error.hpp"

namespace biozip {

bool StandardizationParams::valid() const noexcept {
  return std::isfinite(mu) && std::isfinite(sigma) && sigma > 0.0;
}

StandardizedSignal standardize(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "standardization needs at least two samples");
  }
  const double inv_n = 1.0 / static_cast<double>(n);

  // Two-pass mean with a correction term, then centered sum of squares.
  double sum = 0.0;
  for (double x : samples) sum += x;
  double mu = sum * inv_n;
  double residual = 0.0;
  for (double x : samples) residual += x - mu;
  mu += residual * inv_n;

  double ss = 0.0;
  for (double x : samples) {
    const double d = x - mu;
    ss += d * d;
  }
  const double sigma = std::sqrt(ss * inv_n);
  if (!(sigma > 0.0)) {
    throw Error(ErrorCode::kDegenerateInput,
                "signal is constant (standard deviation is zero)");
  }
  if (!std::isfinite(mu) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidArgument, "signal statistics overflow");
  }

  StandardizedSignal out;
  out.params = {mu, sigma};
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = (samples[i] - mu) / sigma;
  return out;
}

std::vector<double> destandardize(std::span<const double> standardized,
                                  const StandardizationParams& params) {
  if (!params.valid()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid standardization parameters");
  }
  std::vector<double> out(standardized.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = standardized[i] * params.sigma + params.mu;
  }
  return out;
}

std::vector<StandardizedSegment> segment(std::span<const double> standardized,
                                         std::size_t num_segments) {
  const std::size_t length = standardized.size();
  if (num_segments == 0 || num_segments > length) {
    throw Error(ErrorCode::kInvalidArgument,
                "segment count " + std::to_string(num_segments) +
                    " must be in [1, " + std::to_string(length) + "]");
  }
  const std::size_t sp = length / num_segments;
  std::vector<StandardizedSegment> segments(num_segments);
  for (std::size_t k = 0; k < num_segments; ++k) {
    const std::size_t begin = k * sp;
    const std::size_t end = (k + 1 == num_segments) ? length : begin + sp;
    segments[k].segment_index = k;
    segments[k].original_offset = begin;
    segments[k].data.assign(standardized.begin() + static_cast<std::ptrdiff_t>(begin),
                            standardized.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return segments;
}

std::size_t segments_for_sampling_time(double sample_rate,
                                       std::size_t total_samples,
                                       double ts_seconds) {
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  }
  if (!(ts_seconds > 0.0) || !std::isfinite(ts_seconds)) {
    throw Error(ErrorCode::kInvalidArgument, "sampling time must be positive");
  }
  if (total_samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "signal is empty");
  }
  // A period shorter than half a sample still yields one-sample segments.
  const double per_segment = std::max(1.0, std::round(ts_seconds * sample_rate));
  if (per_segment >= static_cast<double>(total_samples)) return 1;
  return total_samples / static_cast<std::size_t>(per_segment);
}

}  // namespace biozip
