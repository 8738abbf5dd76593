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


// Acceptance suite. Each criterion prints one PASS or FAIL line; the exit
// status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "biozip/container.hpp"
#include "biozip/entropy.hpp"
#include "biozip/error.hpp"
#include "biozip/metrics.hpp"
#include "biozip/pipeline.hpp"
#include "biozip/signal_io.hpp"
#include "biozip/transform.hpp"
#include "cli/sweep.hpp"
#include "oracles.hpp"
#include "test_paths.hpp"

namespace biozip::acceptance {
namespace {

namespace t = biozip::testing;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

const RawSignal& fixture() {
  static const RawSignal s = read_signal(t::data_path("eeg_60s_seed42.csv"), SignalFormat::kCsv);
  return s;
}

PipelineConfig config(TransformKind tr, CodecKind codec, double thr, std::size_t segments = 1) {
  PipelineConfig c;
  c.transform = tr;
  c.codec = codec;
  c.thr = ThresholdSpec(thr);
  c.num_segments = segments;
  return c;
}

// Threshold grid for the rate-distortion criteria: wide enough that every
// configuration crosses the matched distortion targets.
std::vector<double> wide_grid() { return cli::threshold_grid(0.001, 0.9, 40); }

// 1. Lossless-stage exactness --------------------------------------------------

Verdict lossless_exactness() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> length(1, 4096);
  std::uniform_real_distribution<double> fraction(0.0, 1.0);
  std::uniform_real_distribution<double> ratio(0.0, 0.2);
  int failures = 0;
  std::size_t values = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = length(rng);
    std::vector<double> block;
    if (i % 2 == 0) {
      // Zero fraction drawn directly, including both extremes.
      const double zf = i == 0 ? 0.0 : i == 2 ? 1.0 : fraction(rng);
      block = t::random_sparse_block(rng, n, zf);
    } else {
      // Output of the real threshold stage on a transformed random segment.
      const auto x = t::random_vector(rng, n);
      const CoefficientBlock c = dct_forward(x);
      block = threshold(c, ThresholdSpec(ratio(rng))).block.coefficients;
    }
    values += block.size();
    for (CodecKind codec : {CodecKind::kRle, CodecKind::kArith}) {
      const EncodedPayload p = encode(codec, block);
      if (!t::bit_equal(decode(p), block)) ++failures;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {failures == 0 && secs < 30.0,
          fmt("2000 round trips over %zu values, %d mismatches, %.2f s (limit 30 s)", values,
              failures, secs)};
}

// 2. Transform fidelity --------------------------------------------------------

Verdict transform_fidelity() {
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<std::size_t> length(1, 4096);
  std::uniform_int_distribution<int> levels(1, 3);
  double worst_roundtrip = 0.0, worst_parseval = 0.0, worst_oracle = 0.0;
  const RawSignal eeg = synth_eeg(30.0, 256.0, 77);
  const auto eeg_std = standardize(eeg.samples).values;

  auto parseval = [](std::span<const double> x, std::span<const double> y) {
    const long double ex = t::energy(x);
    if (ex == 0.0L) return 0.0;
    return static_cast<double>(std::abs((ex - t::energy(y)) / ex));
  };

  for (int i = 0; i < 500; ++i) {
    const std::size_t n = length(rng);
    std::vector<double> x;
    if (i % 3 == 0) {
      const std::size_t off = rng() % (eeg_std.size() - n);
      x.assign(eeg_std.begin() + off, eeg_std.begin() + off + n);
    } else {
      x = t::random_vector(rng, n, i % 3 == 1 ? 1.0 : 10.0);
    }

    const CoefficientBlock d = dct_forward(x);
    worst_roundtrip = std::max(worst_roundtrip, t::max_abs_diff(dct_inverse(d), x));
    worst_parseval = std::max(worst_parseval, parseval(x, d.coefficients));

    const int lv = levels(rng);
    std::vector<double> padded(x);
    padded.resize(n + dwt_pad_length(n, lv), 0.0);
    const CoefficientBlock w = dwt_forward(padded, lv);
    worst_roundtrip = std::max(worst_roundtrip, t::max_abs_diff(dwt_inverse(w), padded));
    worst_parseval = std::max(worst_parseval, parseval(padded, w.coefficients));
  }
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto x = t::random_vector(rng, n, 2.0);
    worst_oracle = std::max(worst_oracle, t::max_abs_diff(dct_forward(x).coefficients,
                                                          t::direct_dct(x)));
  }
  return {worst_roundtrip <= 1e-9 && worst_oracle <= 1e-9 && worst_parseval <= 1e-9,
          fmt("500 segments; max round-trip error %.3g, max oracle error (N<=64) %.3g, "
              "max Parseval deviation %.3g (limit 1e-9)",
              worst_roundtrip, worst_oracle, worst_parseval)};
}

// 3. End-to-end identity at thr = 0 --------------------------------------------

Verdict zero_threshold_identity() {
  const RawSignal s = synth_eeg(10.0, 256.0, 42);
  double worst = 0.0;
  for (const auto& pair : cli::all_codec_pairs()) {
    const CompressResult r = compress(s, config(pair.transform, pair.codec, 0.0));
    const DecompressResult back = decompress(deserialize(serialize(r.file)));
    if (back.signal.size() != s.size()) return {false, "length mismatch"};
    worst = std::max(worst, t::max_abs_diff(back.signal.samples, s.samples));
  }
  return {worst <= 1e-9, fmt("4 configurations, max abs error %.3g (limit 1e-9)", worst)};
}

// 4. Controllable accuracy -----------------------------------------------------

Verdict controllable_accuracy() {
  const auto grid = cli::threshold_grid(cli::kDefaultThrMin, cli::kDefaultThrMax,
                                        cli::kDefaultThrCount);
  int violations = 0;
  std::size_t runs = 0;
  for (std::size_t segments : {1u, 10u, 60u}) {
    RunReport prev;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const RunReport r =
          evaluate(fixture(), config(TransformKind::kDct, CodecKind::kRle, grid[i], segments));
      ++runs;
      if (i > 0) {
        if (r.cr_percent < prev.cr_percent) ++violations;
        if (r.rmse_std < prev.rmse_std) ++violations;
      }
      prev = r;
    }
  }
  return {violations == 0,
          fmt("DCT/RLE over 12 log-spaced thr in [0.005, 0.05] x segments {1,10,60} "
              "(%zu runs): %d monotonicity violations",
              runs, violations)};
}

// 5. Operating point on the bundled fixture -----------------------------------

Verdict operating_point() {
  double best_cr_02 = -1e9, best_cr_05 = -1e9;
  int violations = 0;
  RunReport prev;
  const auto grid = wide_grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RunReport r = evaluate(fixture(), config(TransformKind::kDct, CodecKind::kRle, grid[i]));
    if (r.rmse_std <= 0.2) best_cr_02 = std::max(best_cr_02, r.cr_percent);
    if (r.rmse_std <= 0.5) best_cr_05 = std::max(best_cr_05, r.cr_percent);
    if (i > 0 && (r.cr_percent < prev.cr_percent || r.rmse_std < prev.rmse_std)) ++violations;
    prev = r;
  }
  return {best_cr_02 >= 80.0 && best_cr_05 >= 90.0 && violations == 0,
          fmt("DCT/RLE on 60 s fixture: best CR %.2f%% at rmse<=0.2 (need >=80), "
              "%.2f%% at rmse<=0.5 (need >=90), %d curve violations over %zu thr",
              best_cr_02, best_cr_05, violations, grid.size())};
}

// 6. Ranking at matched distortion ---------------------------------------------

struct CurvePoint {
  double thr;
  RunReport report;
};

std::vector<CurvePoint> curve(TransformKind tr, CodecKind codec) {
  std::vector<CurvePoint> pts;
  for (double thr : wide_grid()) pts.push_back({thr, evaluate(fixture(), config(tr, codec, thr))});
  return pts;
}

const CurvePoint& nearest(const std::vector<CurvePoint>& pts, double target) {
  return *std::min_element(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::abs(a.report.rmse_std - target) < std::abs(b.report.rmse_std - target);
  });
}

double median_t_total(TransformKind tr, CodecKind codec, double thr) {
  std::vector<double> times;
  for (int run = 0; run < 5; ++run) {
    times.push_back(evaluate(fixture(), config(tr, codec, thr)).t_total);
  }
  std::sort(times.begin(), times.end());
  return times[2];
}

Verdict ranking() {
  // Warm the transform plan cache so the first timed run is not penalized.
  (void)evaluate(fixture(), config(TransformKind::kDct, CodecKind::kRle, 0.01));

  const auto dct_rle = curve(TransformKind::kDct, CodecKind::kRle);
  const auto dwt_rle = curve(TransformKind::kDwt, CodecKind::kRle);
  const auto dct_arith = curve(TransformKind::kDct, CodecKind::kArith);

  bool cr_ok = true;
  int faster = 0;
  std::string detail;
  for (double target : {0.10, 0.14, 0.20}) {
    const CurvePoint& a = nearest(dct_rle, target);
    const CurvePoint& b = nearest(dwt_rle, target);
    const CurvePoint& c = nearest(dct_arith, target);
    cr_ok = cr_ok && a.report.cr_percent >= b.report.cr_percent;
    const double ta = median_t_total(TransformKind::kDct, CodecKind::kRle, a.thr);
    const double tc = median_t_total(TransformKind::kDct, CodecKind::kArith, c.thr);
    if (ta <= tc) ++faster;
    detail += fmt("rmse %.2f: CR dct/rle %.1f%% vs dwt/rle %.1f%%, t_total %.2g vs %.2g s; ",
                  target, a.report.cr_percent, b.report.cr_percent, ta, tc);
  }
  detail += fmt("DCT/RLE faster than DCT/Arith at %d of 3 points", faster);
  return {cr_ok && faster >= 2, detail};
}

// 7. Feasibility bound ---------------------------------------------------------

Verdict feasibility() {
  std::mt19937_64 rng(7007);
  std::uniform_real_distribution<double> u(0.0, 0.05);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    StageTimings tm{u(rng), u(rng), u(rng), u(rng), u(rng)};
    if (i % 10 == 0) tm.t_thr = tm.t_ilossy;  // ties
    const double expected = t::oracle_t_min(tm);
    const double ts = (i % 4 == 0) ? expected : u(rng);
    const Feasibility f = check_realtime_feasibility(tm, ts);
    if (f.t_min != expected || f.feasible != (ts >= expected)) ++mismatches;
  }
  return {mismatches == 0, fmt("100 random timing tuples, %d mismatches", mismatches)};
}

// 8. Container robustness -----------------------------------------------------

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::vector<std::uint8_t>> fuzz_seeds() {
  std::vector<std::vector<std::uint8_t>> seeds{read_bytes(t::data_path("dct_rle_seg4.bzp")),
                                               read_bytes(t::data_path("dwt_arith_l3_seg3.bzp"))};
  const RawSignal small = synth_eeg(1.0, 64.0, 5);
  for (const auto& pair : cli::all_codec_pairs()) {
    auto cfg = config(pair.transform, pair.codec, 0.05, 3);
    cfg.dwt_levels = 2;
    seeds.push_back(serialize(compress(small, cfg).file));
  }
  return seeds;
}

void mutate(std::vector<std::uint8_t>& b, std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); };
  const int rounds = 1 + static_cast<int>(rng() % 3);
  for (int r = 0; r < rounds; ++r) {
    switch (rng() % 8) {
      case 0:
        if (!b.empty()) b[pick(b.size())] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
        break;
      case 1:
        if (!b.empty()) b[pick(b.size())] = static_cast<std::uint8_t>(rng());
        break;
      case 2:
        b.resize(pick(b.size() + 1));
        break;
      case 3:
        for (std::size_t k = rng() % 16 + 1; k > 0; --k) b.push_back(static_cast<std::uint8_t>(rng()));
        break;
      case 4:
        b.insert(b.begin() + static_cast<std::ptrdiff_t>(pick(b.size() + 1)),
                 static_cast<std::uint8_t>(rng()));
        break;
      case 5:
        if (!b.empty()) b.erase(b.begin() + static_cast<std::ptrdiff_t>(pick(b.size())));
        break;
      case 6: {
        // Overwrite a 32-bit field (count, lengths) with a boundary value.
        static constexpr std::uint32_t kValues[] = {0, 1, 2, 7, 0x7fffffff, 0xffffffff, 256, 4096};
        if (b.size() >= 4) {
          const std::size_t at = pick(b.size() - 3);
          const std::uint32_t v = kValues[rng() % std::size(kValues)];
          for (int k = 0; k < 4; ++k) b[at + k] = static_cast<std::uint8_t>(v >> (8 * k));
        }
        break;
      }
      default:
        // Header bytes are the most interesting targets.
        if (b.size() > 8) b[pick(std::min<std::size_t>(b.size(), 48))] = static_cast<std::uint8_t>(rng());
        break;
    }
  }
}

Verdict container_robustness() {
  const auto seeds = fuzz_seeds();
  std::mt19937_64 rng(8008);
  int untyped = 0, inconsistent = 0, rejected = 0, accepted = 0, decoded = 0;
  std::string first_problem;
  for (int i = 0; i < 10'000; ++i) {
    std::vector<std::uint8_t> bytes = seeds[static_cast<std::size_t>(i) % seeds.size()];
    mutate(bytes, rng);
    try {
      const CompressedFile f = deserialize(bytes);
      ++accepted;
      // Anything accepted must be a well-formed container that serializes
      // back to the same bytes.
      if (serialize(f) != bytes || compressed_size(f) != bytes.size()) {
        ++inconsistent;
        if (first_problem.empty()) first_problem = fmt("iteration %d: non-canonical accept", i);
        continue;
      }
      try {
        const DecompressResult d = decompress(f);
        ++decoded;
        bool finite = true;
        for (double v : d.signal.samples) finite = finite && std::isfinite(v);
        if (d.signal.size() != f.sample_count() || !finite) {
          ++inconsistent;
          if (first_problem.empty()) first_problem = fmt("iteration %d: bad reconstruction", i);
        }
      } catch (const Error&) {
        ++rejected;
      }
    } catch (const Error&) {
      ++rejected;
    } catch (const std::exception& e) {
      ++untyped;
      if (first_problem.empty()) first_problem = fmt("iteration %d: %s", i, e.what());
    }
  }
  return {untyped == 0 && inconsistent == 0,
          fmt("10000 mutations of %zu seed containers: %d typed rejections, %d accepted "
              "(%d decoded), %d untyped errors, %d inconsistent%s%s",
              seeds.size(), rejected, accepted, decoded, untyped, inconsistent,
              first_problem.empty() ? "" : "; first: ", first_problem.c_str())};
}

// 9. Metrics formulas ----------------------------------------------------------

Verdict metrics_formulas() {
  std::mt19937_64 rng(9009);
  std::uniform_int_distribution<std::size_t> length(1, 5000);
  std::uniform_int_distribution<std::uint64_t> bytes(1, 1ull << 40);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = length(rng);
    const auto x = t::random_vector(rng, n, 1.0 + 100.0 * u(rng));
    auto y = x;
    for (auto& v : y) v += (u(rng) - 0.5) * std::pow(10.0, -6.0 * u(rng));
    if (!t::relative_close(rmse(x, y), t::oracle_rmse(x, y), 1e-12)) ++bad;

    const std::uint64_t orig = bytes(rng);
    const std::uint64_t comp = static_cast<std::uint64_t>(static_cast<double>(orig) * 1.2 * u(rng));
    if (!t::relative_close(compression_ratio(orig, comp), t::oracle_cr(orig, comp), 1e-12)) ++bad;

    const StageTimings tm{u(rng), u(rng), u(rng), u(rng), u(rng)};
    const TimeTotals tt = total_time(tm);
    if (tt.t_total != tt.t_comp + tt.t_reconst) ++bad;
    if (tt.t_comp != tm.t_lossy + tm.t_thr + tm.t_lossless) ++bad;
    if (tt.t_reconst != tm.t_ilossless + tm.t_ilossy) ++bad;
  }
  const RunReport r = evaluate(synth_eeg(4.0, 256.0, 1),
                               config(TransformKind::kDwt, CodecKind::kArith, 0.01, 4));
  if (r.t_total != r.t_comp + r.t_reconst) ++bad;
  return {bad == 0, fmt("100 random cases for rmse, CR and time totals: %d mismatches", bad)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace biozip::acceptance

int main() {
  using namespace biozip::acceptance;
  const Criterion criteria[] = {
      {1, "lossless-stage exactness", lossless_exactness},
      {2, "transform fidelity", transform_fidelity},
      {3, "end-to-end identity at thr=0", zero_threshold_identity},
      {4, "controllable accuracy", controllable_accuracy},
      {5, "operating point on 60 s fixture", operating_point},
      {6, "ranking at matched rmse", ranking},
      {7, "feasibility bound", feasibility},
      {8, "container robustness", container_robustness},
      {9, "metrics formulas", metrics_formulas},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("[%s] criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
