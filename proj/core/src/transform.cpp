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

#include "biozip/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "biozip/error.hpp"

namespace biozip {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

struct FftwFree {
  void operator()(double* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<double[], FftwFree>;

FftwBuffer make_buffer(std::size_t n) {
  auto* p = fftw_alloc_real(std::max<std::size_t>(n, 1));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer(p);
}

// FFTW's planner is not thread-safe, execution on fresh arrays is. Plans are
// made once per (kind, length) with FFTW_ESTIMATE, which picks the same
// algorithm every time, and kept until the process exits.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(fftw_r2r_kind kind, int n) {
    std::lock_guard lock(mu_);
    auto [it, inserted] = plans_.try_emplace({static_cast<int>(kind), n}, nullptr);
    if (inserted) {
      auto in = make_buffer(static_cast<std::size_t>(n));
      auto out = make_buffer(static_cast<std::size_t>(n));
      it->second = fftw_plan_r2r_1d(n, in.get(), out.get(), kind, FFTW_ESTIMATE);
      if (it->second == nullptr) {
        plans_.erase(it);
        throw Error(ErrorCode::kInvalidArgument,
                    "FFTW could not plan length " + std::to_string(n));
      }
    }
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

fftw_plan cached_plan(fftw_r2r_kind kind, int n) {
  static PlanCache cache;
  return cache.get(kind, n);
}

int checked_length(std::size_t n) {
  if (n > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw Error(ErrorCode::kInvalidArgument, "segment too long for the DCT");
  }
  return static_cast<int>(n);
}

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(what) + " contains a non-finite value");
    }
  }
}

void require_levels(int levels) {
  if (levels < 1 || levels > kMaxDwtLevels) {
    throw Error(ErrorCode::kInvalidArgument,
                "DWT levels must be in [1, " + std::to_string(kMaxDwtLevels) + "]");
  }
}

}  // namespace

std::string_view to_string(TransformKind kind) noexcept {
  return kind == TransformKind::kDct ? "dct" : "dwt";
}

ThresholdSpec::ThresholdSpec(double ratio) : ratio_(ratio) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be in [0, 1]");
  }
}

// FFTW's REDFT10 computes 2 * sum_x f(x) cos(pi (2x+1) u / 2N); the
// orthonormal scale is sqrt(2/N) / 2, with an extra 1/sqrt(2) on u = 0.
CoefficientBlock dct_forward(std::span<const double> segment) {
  if (segment.empty()) throw Error(ErrorCode::kInvalidArgument, "DCT input is empty");
  require_finite(segment, "DCT input");
  const std::size_t n = segment.size();
  const fftw_plan plan = cached_plan(FFTW_REDFT10, checked_length(n));

  auto in = make_buffer(n);
  auto out = make_buffer(n);
  std::copy(segment.begin(), segment.end(), in.get());
  fftw_execute_r2r(plan, in.get(), out.get());

  const double scale = std::sqrt(2.0 / static_cast<double>(n)) * 0.5;
  CoefficientBlock block;
  block.transform = TransformKind::kDct;
  block.original_length = n;
  block.coefficients.resize(n);
  block.coefficients[0] = out[0] * scale * kInvSqrt2;
  for (std::size_t u = 1; u < n; ++u) block.coefficients[u] = out[u] * scale;
  return block;
}

// REDFT01 computes X(0) + 2 sum_{u>0} X(u) cos(pi (2x+1) u / 2N), so the
// coefficients are pre-scaled to make it the orthonormal inverse.
std::vector<double> dct_inverse(const CoefficientBlock& block) {
  if (block.transform != TransformKind::kDct) {
    throw Error(ErrorCode::kInvalidArgument, "dct_inverse given a non-DCT block");
  }
  const std::size_t n = block.coefficients.size();
  if (n == 0 || n != block.original_length) {
    throw Error(ErrorCode::kInvalidArgument, "DCT block length mismatch");
  }
  const fftw_plan plan = cached_plan(FFTW_REDFT01, checked_length(n));

  auto in = make_buffer(n);
  auto out = make_buffer(n);
  const double scale = std::sqrt(2.0 / static_cast<double>(n));
  in[0] = block.coefficients[0] * scale * kInvSqrt2;
  for (std::size_t u = 1; u < n; ++u) in[u] = block.coefficients[u] * scale * 0.5;
  fftw_execute_r2r(plan, in.get(), out.get());
  return std::vector<double>(out.get(), out.get() + n);
}

std::size_t dwt_pad_length(std::size_t length, int levels) {
  require_levels(levels);
  const std::size_t block = std::size_t{1} << levels;
  const std::size_t rem = length % block;
  return rem == 0 ? 0 : block - rem;
}

CoefficientBlock dwt_forward(std::span<const double> segment, int levels) {
  require_levels(levels);
  const std::size_t n = segment.size();
  const std::size_t block_size = std::size_t{1} << levels;
  if (n == 0 || n % block_size != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "DWT input length " + std::to_string(n) + " is not divisible by 2^" +
                    std::to_string(levels));
  }
  require_finite(segment, "DWT input");

  std::vector<double> work(segment.begin(), segment.end());
  std::vector<double> scratch(n);
  std::size_t len = n;
  for (int level = 0; level < levels; ++level) {
    const std::size_t half = len / 2;
    for (std::size_t m = 0; m < half; ++m) {
      const double a = work[2 * m];
      const double b = work[2 * m + 1];
      scratch[m] = (a + b) * kInvSqrt2;
      scratch[half + m] = (a - b) * kInvSqrt2;
    }
    std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(len), work.begin());
    len = half;
  }

  CoefficientBlock out;
  out.transform = TransformKind::kDwt;
  out.coefficients = std::move(work);
  out.original_length = n;
  out.dwt_levels = levels;
  return out;
}

std::vector<double> dwt_inverse(const CoefficientBlock& block) {
  if (block.transform != TransformKind::kDwt) {
    throw Error(ErrorCode::kInvalidArgument, "dwt_inverse given a non-DWT block");
  }
  require_levels(block.dwt_levels);
  const std::size_t n = block.coefficients.size();
  const std::size_t block_size = std::size_t{1} << block.dwt_levels;
  if (n == 0 || n != block.original_length || n % block_size != 0) {
    throw Error(ErrorCode::kInvalidArgument, "DWT coefficient layout length is malformed");
  }

  std::vector<double> work = block.coefficients;
  std::vector<double> scratch(n);
  std::size_t len = n >> block.dwt_levels;
  for (int level = 0; level < block.dwt_levels; ++level) {
    for (std::size_t m = 0; m < len; ++m) {
      const double a = work[m];
      const double d = work[len + m];
      scratch[2 * m] = (a + d) * kInvSqrt2;
      scratch[2 * m + 1] = (a - d) * kInvSqrt2;
    }
    len *= 2;
    std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(len), work.begin());
  }
  return work;
}

ThresholdResult threshold(const CoefficientBlock& block, ThresholdSpec spec) {
  ThresholdResult result{block, 0};
  auto& coeffs = result.block.coefficients;

  double max_abs = 0.0;
  for (double c : coeffs) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) return result;

  const double thr = spec.ratio();
  for (double& c : coeffs) {
    if (std::abs(c) / max_abs <= thr) {
      c = 0.0;
    } else {
      ++result.retained_count;
    }
  }
  return result;
}

}  // namespace biozip
