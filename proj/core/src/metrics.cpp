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

#include "biozip/metrics.hpp"

#include <cmath>
#include <string>

#include "biozip/error.hpp"

namespace biozip {

double rmse(std::span<const double> original, std::span<const double> recovered) {
  if (original.size() != recovered.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "rmse length mismatch: " + std::to_string(original.size()) + " vs " +
                    std::to_string(recovered.size()));
  }
  if (original.empty()) throw Error(ErrorCode::kInvalidArgument, "rmse of empty input");
  double ss = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const double d = original[i] - recovered[i];
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(original.size()));
}

double compression_ratio(std::uint64_t original_bytes, std::uint64_t compressed_bytes) {
  if (original_bytes == 0) {
    throw Error(ErrorCode::kInvalidArgument, "original size must be positive");
  }
  const double original = static_cast<double>(original_bytes);
  const double compressed = static_cast<double>(compressed_bytes);
  return (original - compressed) / original * 100.0;
}

TimeTotals total_time(const StageTimings& t) noexcept {
  TimeTotals totals;
  totals.t_comp = t.t_lossy + t.t_thr + t.t_lossless;
  totals.t_reconst = t.t_ilossless + t.t_ilossy;
  totals.t_total = totals.t_comp + totals.t_reconst;
  return totals;
}

}  // namespace biozip
