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

#include "biozip/entropy.hpp"
#include "biozip/transform.hpp"

namespace biozip {

struct PipelineConfig {
  TransformKind transform = TransformKind::kDct;
  CodecKind codec = CodecKind::kRle;
  ThresholdSpec thr{0.01};
  int dwt_levels = 1;
  std::size_t num_segments = 1;
  /// Worker threads for per-segment work. Output bytes do not depend on it.
  unsigned threads = 1;

  /// Throws kInvalidArgument on levels outside [1, kMaxDwtLevels], zero
  /// segments or zero threads.
  void validate() const;
};

/// Wall-clock seconds spent in each stage.
struct StageTimings {
  double t_lossy = 0.0;      // forward transform
  double t_thr = 0.0;        // thresholding
  double t_lossless = 0.0;   // entropy encode
  double t_ilossless = 0.0;  // entropy decode
  double t_ilossy = 0.0;     // inverse transform

  StageTimings& operator+=(const StageTimings& other) noexcept;
  StageTimings scaled(double factor) const noexcept;
};

}  // namespace biozip
