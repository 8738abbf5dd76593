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

#include "biozip/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "biozip/error.hpp"
#include "biozip/preprocess.hpp"

namespace biozip {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception by index wins, so failures are reported deterministically.
template <typename Body>
void for_each_index(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct SegmentOutput {
  CompressedSegment segment;
  StageTimings timings;
  std::size_t retained = 0;
};

SegmentOutput compress_segment(const StandardizedSegment& seg, const PipelineConfig& config) {
  SegmentOutput out;
  const std::size_t length = seg.data.size();
  const bool dwt = config.transform == TransformKind::kDwt;
  const std::size_t pad = dwt ? dwt_pad_length(length, config.dwt_levels) : 0;
  if (length + pad > kMaxSegmentSamples) {
    throw Error(ErrorCode::kInvalidArgument,
                "segment of " + std::to_string(length) + " samples exceeds the " +
                    std::to_string(kMaxSegmentSamples) + "-sample limit; use more segments");
  }
  out.segment.original_length = static_cast<std::uint32_t>(length);

  auto start = Clock::now();
  CoefficientBlock block;
  if (!dwt) {
    block = dct_forward(seg.data);
  } else {
    out.segment.pad_length = static_cast<std::uint32_t>(pad);
    std::vector<double> padded(seg.data);
    padded.resize(length + pad, 0.0);
    block = dwt_forward(padded, config.dwt_levels);
  }
  out.timings.t_lossy = seconds_since(start);

  start = Clock::now();
  ThresholdResult thresholded = threshold(block, config.thr);
  out.timings.t_thr = seconds_since(start);
  out.retained = thresholded.retained_count;

  start = Clock::now();
  out.segment.payload = encode(config.codec, thresholded.block.coefficients);
  out.timings.t_lossless = seconds_since(start);
  return out;
}

struct SegmentReconstruction {
  std::vector<double> samples;
  StageTimings timings;
};

SegmentReconstruction reconstruct_segment(const CompressedFile& file, std::size_t index) {
  const CompressedSegment& seg = file.segments[index];
  SegmentReconstruction out;
  try {
    auto start = Clock::now();
    CoefficientBlock block;
    block.transform = file.transform;
    block.coefficients = decode(seg.payload);
    block.original_length = block.coefficients.size();
    block.dwt_levels = file.transform == TransformKind::kDwt ? file.dwt_levels : 1;
    out.timings.t_ilossless = seconds_since(start);

    start = Clock::now();
    out.samples = file.transform == TransformKind::kDct ? dct_inverse(block) : dwt_inverse(block);
    out.samples.resize(seg.original_length);
    out.timings.t_ilossy = seconds_since(start);
    // Only a damaged payload can decode to coefficients this large.
    for (double v : out.samples) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kMalformedPayload, "reconstruction is not finite");
      }
    }
  } catch (const Error& e) {
    throw Error(e.code(), "segment " + std::to_string(index) + ": " + e.what());
  }
  return out;
}

}  // namespace

void PipelineConfig::validate() const {
  if (dwt_levels < 1 || dwt_levels > kMaxDwtLevels) {
    throw Error(ErrorCode::kInvalidArgument,
                "DWT levels must be in [1, " + std::to_string(kMaxDwtLevels) + "]");
  }
  if (num_segments == 0) throw Error(ErrorCode::kInvalidArgument, "segment count must be >= 1");
  if (threads == 0) throw Error(ErrorCode::kInvalidArgument, "thread count must be >= 1");
}

StageTimings& StageTimings::operator+=(const StageTimings& o) noexcept {
  t_lossy += o.t_lossy;
  t_thr += o.t_thr;
  t_lossless += o.t_lossless;
  t_ilossless += o.t_ilossless;
  t_ilossy += o.t_ilossy;
  return *this;
}

StageTimings StageTimings::scaled(double f) const noexcept {
  return {t_lossy * f, t_thr * f, t_lossless * f, t_ilossless * f, t_ilossy * f};
}

CompressResult compress(const RawSignal& signal, const PipelineConfig& config) {
  validate_signal(signal);
  config.validate();

  const StandardizedSignal standardized = standardize(signal.samples);
  const auto segments = segment(standardized.values, config.num_segments);

  std::vector<SegmentOutput> outputs(segments.size());
  for_each_index(segments.size(), config.threads, [&](std::size_t i) {
    outputs[i] = compress_segment(segments[i], config);
  });

  CompressResult result;
  result.file.transform = config.transform;
  result.file.codec = config.codec;
  result.file.dwt_levels =
      config.transform == TransformKind::kDwt ? static_cast<std::uint8_t>(config.dwt_levels) : 0;
  result.file.params = standardized.params;
  result.file.sample_rate = signal.sample_rate;
  result.file.segments.reserve(outputs.size());
  for (auto& out : outputs) {
    result.timings += out.timings;
    result.retained_coefficients += out.retained;
    result.file.segments.push_back(std::move(out.segment));
  }
  return result;
}

DecompressResult decompress(const CompressedFile& file, unsigned threads) {
  validate(file);
  std::vector<SegmentReconstruction> parts(file.segments.size());
  for_each_index(parts.size(), threads, [&](std::size_t i) {
    parts[i] = reconstruct_segment(file, i);
  });

  DecompressResult result;
  result.standardized.reserve(file.sample_count());
  for (const auto& part : parts) {
    result.timings += part.timings;
    result.standardized.insert(result.standardized.end(), part.samples.begin(), part.samples.end());
  }
  result.signal.sample_rate = file.sample_rate;
  result.signal.samples = destandardize(result.standardized, file.params);
  for (double v : result.signal.samples) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidHeader, "mu and sigma overflow the reconstruction");
    }
  }
  return result;
}

Feasibility check_realtime_feasibility(const StageTimings& t, double ts_seconds) noexcept {
  const double t_min = std::max({t.t_lossy, t.t_thr, t.t_lossless, t.t_ilossless, t.t_ilossy});
  return {ts_seconds >= t_min, t_min};
}

RunReport evaluate(const RawSignal& signal, const PipelineConfig& config,
                   std::vector<std::uint8_t>* container) {
  CompressResult compressed = compress(signal, config);
  const auto bytes = serialize(compressed.file);
  const DecompressResult restored = decompress(deserialize(bytes), config.threads);
  const StandardizedSignal reference = standardize(signal.samples);

  RunReport report;
  report.config = config;
  report.rmse_std = rmse(reference.values, restored.standardized);
  report.rmse_raw = rmse(signal.samples, restored.signal.samples);
  report.original_bytes = original_size_bytes(signal.size());
  report.compressed_bytes = bytes.size();
  report.cr_percent = compression_ratio(report.original_bytes, report.compressed_bytes);

  report.timings = compressed.timings;
  report.timings.t_ilossless = restored.timings.t_ilossless;
  report.timings.t_ilossy = restored.timings.t_ilossy;
  const TimeTotals totals = total_time(report.timings);
  report.t_comp = totals.t_comp;
  report.t_reconst = totals.t_reconst;
  report.t_total = totals.t_total;

  const double per_segment = 1.0 / static_cast<double>(config.num_segments);
  report.t_min = check_realtime_feasibility(report.timings.scaled(per_segment), 0.0).t_min;
  report.segment_size = signal.size() / config.num_segments;
  report.retained_coefficients = compressed.retained_coefficients;
  if (container != nullptr) *container = bytes;
  return report;
}

}  // namespace biozip
