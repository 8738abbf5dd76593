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

#include "cli/sweep.hpp"

#include <cmath>

#include "biozip/error.hpp"
#include "biozip/pipeline.hpp"
#include "cli/report.hpp"

namespace biozip::cli {

std::vector<double> threshold_grid(double lo, double hi, std::size_t count, bool linear) {
  if (count == 0) throw Error(ErrorCode::kInvalidArgument, "threshold count must be >= 1");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold range must satisfy 0 <= min <= max <= 1");
  }
  if (!linear && lo <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "log-spaced thresholds need a positive minimum");
  }
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double steps = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / steps;
    grid[i] = linear ? lo + (hi - lo) * f : lo * std::pow(hi / lo, f);
  }
  // Pin the endpoints exactly.
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<CodecPair> all_codec_pairs() {
  return {{TransformKind::kDct, CodecKind::kRle},
          {TransformKind::kDct, CodecKind::kArith},
          {TransformKind::kDwt, CodecKind::kRle},
          {TransformKind::kDwt, CodecKind::kArith}};
}

void SweepSpec::validate() const {
  if (thresholds.empty() || segment_counts.empty() || configs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sweep lists must be non-empty");
  }
  for (double t : thresholds) ThresholdSpec{t};
}

std::vector<SweepRow> run_sweep(const RawSignal& signal, const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(spec.configs.size() * spec.segment_counts.size() * spec.thresholds.size());
  for (const auto& pair : spec.configs) {
    for (std::size_t segments : spec.segment_counts) {
      for (double thr : spec.thresholds) {
        SweepRow row;
        row.config.transform = pair.transform;
        row.config.codec = pair.codec;
        row.config.thr = ThresholdSpec{thr};
        row.config.dwt_levels = spec.dwt_levels;
        row.config.num_segments = segments;
        row.config.threads = spec.threads;
        try {
          row.report = evaluate(signal, row.config);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& row : rows) out << csv_row(row.config, row.report, row.error) << '\n';
}

}  // namespace biozip::cli
