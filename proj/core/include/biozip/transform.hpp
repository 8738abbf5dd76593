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

// Orthonormal DCT-II and multi-level Haar DWT, and relative thresholding of
// their coefficients. Thresholding is the only lossy step in the codec.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace biozip {

enum class TransformKind : std::uint8_t { kDct = 0, kDwt = 1 };

std::string_view to_string(TransformKind kind) noexcept;

/// Largest supported Haar depth. 2^24 samples per segment is far beyond any
/// practical segment and keeps the level count representable in one byte.
inline constexpr int kMaxDwtLevels = 24;

struct CoefficientBlock {
  TransformKind transform = TransformKind::kDct;
  std::vector<double> coefficients;
  /// Number of transform-domain values; equals coefficients.size().
  std::size_t original_length = 0;
  /// Decomposition depth, meaningful only for kDwt.
  int dwt_levels = 1;
};

/// Ratio to the largest absolute coefficient, in [0, 1].
class ThresholdSpec {
 public:
  ThresholdSpec() = default;
  /// Throws kInvalidArgument outside [0, 1] or for NaN.
  explicit ThresholdSpec(double ratio);

  double ratio() const noexcept { return ratio_; }

 private:
  double ratio_ = 0.0;
};

/// Y(u) = sqrt(2/N) a(u) sum_x f(x) cos(pi (2x+1) u / 2N), a(0) = 1/sqrt(2).
CoefficientBlock dct_forward(std::span<const double> segment);
std::vector<double> dct_inverse(const CoefficientBlock& block);

/// Haar analysis applied `levels` times to the approximation band.
/// Output layout is [A_L | D_L | D_{L-1} | ... | D_1], coarsest first.
/// The input length must be divisible by 2^levels.
CoefficientBlock dwt_forward(std::span<const double> segment, int levels);
std::vector<double> dwt_inverse(const CoefficientBlock& block);

/// Samples of zero padding needed so that `length` divides by 2^levels.
std::size_t dwt_pad_length(std::size_t length, int levels);

struct ThresholdResult {
  CoefficientBlock block;
  std::size_t retained_count = 0;
};

/// Zeroes every coefficient c with |c| / max|c| <= ratio; survivors are
/// left bit-for-bit unchanged. The comparison is strict, so at ratio 1 even
/// the maximum is dropped. An all-zero block is returned as is.
ThresholdResult threshold(const CoefficientBlock& block, ThresholdSpec spec);

}  // namespace biozip
