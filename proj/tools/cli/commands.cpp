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

#include "cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>

#include "CLI11.hpp"
#include "biozip/error.hpp"
#include "biozip/pipeline.hpp"
#include "biozip/preprocess.hpp"
#include "cli/report.hpp"
#include "cli/sweep.hpp"

namespace biozip::cli {
namespace {

namespace fs = std::filesystem;

TransformKind parse_transform(const std::string& name) {
  return name == "dwt" ? TransformKind::kDwt : TransformKind::kDct;
}

CodecKind parse_codec(const std::string& name) {
  return name == "arith" ? CodecKind::kArith : CodecKind::kRle;
}

// An empty format means: raw binary for .raw/.f64/.bin paths, CSV otherwise.
SignalFormat resolve_format(const std::string& format, const fs::path& path) {
  if (format == "csv") return SignalFormat::kCsv;
  if (format == "raw") return SignalFormat::kRawF64Le;
  const auto ext = path.extension().string();
  if (ext == ".raw" || ext == ".f64" || ext == ".bin") return SignalFormat::kRawF64Le;
  return SignalFormat::kCsv;
}

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

struct GenArgs {
  double duration = 0.0;
  double rate = kDefaultSampleRate;
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
};

struct CompressArgs {
  std::string input;
  std::string output;
  std::string transform = "dct";
  std::string codec = "rle";
  double thr = 0.01;
  int levels = 1;
  std::size_t segments = 1;
  double ts = 0.0;
  double rate = kDefaultSampleRate;
  std::string format;
  unsigned threads = 1;
  std::string report;
};

struct DecompressArgs {
  std::string input;
  std::string output;
  std::string format;
  unsigned threads = 1;
};

struct SweepArgs {
  std::string input;
  double duration = 60.0;
  std::uint64_t seed = 42;
  double rate = kDefaultSampleRate;
  std::string format;
  std::vector<std::string> transforms;
  std::vector<std::string> codecs;
  std::vector<double> thr;
  double thr_min = kDefaultThrMin;
  double thr_max = kDefaultThrMax;
  std::size_t thr_count = kDefaultThrCount;
  bool linear = false;
  std::vector<std::size_t> segments;
  std::vector<double> ts;
  int levels = 1;
  unsigned threads = 1;
  std::string report;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const RawSignal signal = synth_eeg(a.duration, a.rate, a.seed);
  write_signal(signal, a.output, resolve_format(a.format, a.output));
  out << "wrote " << signal.size() << " samples to " << a.output << '\n';
  return kExitOk;
}

int cmd_compress(const CompressArgs& a, bool ts_given, std::ostream& out) {
  const RawSignal signal = read_signal(a.input, resolve_format(a.format, a.input), a.rate);
  PipelineConfig config;
  config.transform = parse_transform(a.transform);
  config.codec = parse_codec(a.codec);
  config.thr = ThresholdSpec{a.thr};
  config.dwt_levels = a.levels;
  config.num_segments =
      ts_given ? segments_for_sampling_time(signal.sample_rate, signal.size(), a.ts) : a.segments;
  config.threads = a.threads;

  std::vector<std::uint8_t> container;
  const RunReport report = evaluate(signal, config, &container);
  write_bytes(a.output, container);

  const std::string json = to_json(report).dump(2);
  if (!a.report.empty()) write_text(a.report, json + "\n");
  out << json << '\n';
  return kExitOk;
}

int cmd_decompress(const DecompressArgs& a, std::ostream& out) {
  const auto bytes = read_bytes(a.input);
  const CompressedFile file = deserialize(bytes);
  const DecompressResult result = decompress(file, a.threads);
  write_signal(result.signal, a.output, resolve_format(a.format, a.output));

  nlohmann::ordered_json j;
  j["samples"] = result.signal.size();
  j["segments"] = file.segment_count();
  const TimeTotals totals = total_time(result.timings);
  j["t_reconst_s"] = totals.t_reconst;
  j["stages"] = to_json(result.timings);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const RawSignal signal =
      a.input.empty() ? synth_eeg(a.duration, a.rate, a.seed)
                      : read_signal(a.input, resolve_format(a.format, a.input), a.rate);

  SweepSpec spec;
  spec.thresholds = a.thr.empty() ? threshold_grid(a.thr_min, a.thr_max, a.thr_count, a.linear) : a.thr;
  spec.segment_counts = a.segments;
  for (double ts : a.ts) {
    spec.segment_counts.push_back(segments_for_sampling_time(signal.sample_rate, signal.size(), ts));
  }
  if (spec.segment_counts.empty()) spec.segment_counts = {1};
  spec.configs.clear();
  const std::vector<std::string> transforms =
      a.transforms.empty() ? std::vector<std::string>{"dct", "dwt"} : a.transforms;
  const std::vector<std::string> codecs =
      a.codecs.empty() ? std::vector<std::string>{"rle", "arith"} : a.codecs;
  for (const auto& t : transforms) {
    for (const auto& c : codecs) spec.configs.push_back({parse_transform(t), parse_codec(c)});
  }
  spec.dwt_levels = a.levels;
  spec.threads = a.threads;

  const auto rows = run_sweep(signal, spec);
  if (a.report.empty()) {
    write_sweep_csv(out, rows);
  } else {
    std::ofstream file(a.report, std::ios::trunc);
    if (!file) throw Error(ErrorCode::kIo, "cannot open " + a.report + " for writing");
    write_sweep_csv(file, rows);
    file.flush();
    if (!file) throw Error(ErrorCode::kIo, "error writing " + a.report);
    const auto failed = std::count_if(rows.begin(), rows.end(),
                                      [](const SweepRow& r) { return !r.error.empty(); });
    out << "wrote " << rows.size() << " rows (" << failed << " failed) to " << a.report << '\n';
  }
  return kExitOk;
}

CLI::IsMember one_of(std::vector<std::string> names) {
  return CLI::IsMember(std::move(names), CLI::ignore_case);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"biozip: transform + entropy codec for sampled biosignals", "biozip"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic EEG-like signal");
  gen_cmd->add_option("duration", gen.duration, "Duration in seconds")->required();
  gen_cmd->add_option("rate", gen.rate, "Sample rate in Hz (>= 64)")->required();
  gen_cmd->add_option("seed", gen.seed, "PRNG seed")->required();
  gen_cmd->add_option("output", gen.output, "Output path")->required();
  gen_cmd->add_option("--format", gen.format, "csv or raw (default: by extension)")
      ->transform(one_of({"csv", "raw"}));

  CompressArgs comp;
  auto* comp_cmd = app.add_subcommand("compress", "Compress a signal into a .bzp container");
  comp_cmd->add_option("input", comp.input, "Input signal")->required()->check(CLI::ExistingFile);
  comp_cmd->add_option("output", comp.output, "Output container")->required();
  comp_cmd->add_option("--transform", comp.transform, "dct or dwt")
      ->transform(one_of({"dct", "dwt"}));
  comp_cmd->add_option("--codec", comp.codec, "rle or arith")->transform(one_of({"rle", "arith"}));
  comp_cmd->add_option("--thr", comp.thr, "Relative threshold in [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  comp_cmd->add_option("--levels", comp.levels, "Haar decomposition depth")
      ->check(CLI::Range(1, kMaxDwtLevels));
  auto* comp_segments = comp_cmd->add_option("--segments", comp.segments, "Number of segments")
                            ->check(CLI::PositiveNumber);
  auto* comp_ts = comp_cmd->add_option("--ts", comp.ts, "Segment period in seconds")
                      ->check(CLI::PositiveNumber);
  comp_segments->excludes(comp_ts);
  comp_cmd->add_option("--rate", comp.rate, "Input sample rate in Hz")->check(CLI::PositiveNumber);
  comp_cmd->add_option("--format", comp.format, "csv or raw (default: by extension)")
      ->transform(one_of({"csv", "raw"}));
  comp_cmd->add_option("--threads", comp.threads, "Worker threads")->check(CLI::PositiveNumber);
  comp_cmd->add_option("--report", comp.report, "Also write the JSON report here");

  DecompressArgs decomp;
  auto* decomp_cmd = app.add_subcommand("decompress", "Reconstruct a signal from a .bzp container");
  decomp_cmd->add_option("input", decomp.input, "Input container")->required()->check(CLI::ExistingFile);
  decomp_cmd->add_option("output", decomp.output, "Output signal")->required();
  decomp_cmd->add_option("--format", decomp.format, "csv or raw (default: by extension)")
      ->transform(one_of({"csv", "raw"}));
  decomp_cmd->add_option("--threads", decomp.threads, "Worker threads")->check(CLI::PositiveNumber);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a config x segments x threshold sweep to CSV");
  sweep_cmd->add_option("input", sweep.input, "Input signal (default: synthetic)")
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--duration", sweep.duration, "Synthetic duration in seconds")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Synthetic seed")->capture_default_str();
  sweep_cmd->add_option("--rate", sweep.rate, "Sample rate in Hz")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--format", sweep.format, "csv or raw (default: by extension)")
      ->transform(one_of({"csv", "raw"}));
  sweep_cmd->add_option("--transform", sweep.transforms, "Transforms to include (repeatable)")
      ->transform(one_of({"dct", "dwt"}));
  sweep_cmd->add_option("--codec", sweep.codecs, "Codecs to include (repeatable)")
      ->transform(one_of({"rle", "arith"}));
  sweep_cmd->add_option("--thr", sweep.thr, "Explicit thresholds (repeatable)")
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--thr-min", sweep.thr_min, "Smallest threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sweep_cmd->add_option("--thr-max", sweep.thr_max, "Largest threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sweep_cmd->add_option("--thr-count", sweep.thr_count, "Number of thresholds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_flag("--linear", sweep.linear, "Linear instead of log threshold spacing");
  sweep_cmd->add_option("--segments", sweep.segments, "Segment counts (repeatable)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--ts", sweep.ts, "Segment periods in seconds (repeatable)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--levels", sweep.levels, "Haar decomposition depth")
      ->check(CLI::Range(1, kMaxDwtLevels));
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads per run")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--report", sweep.report, "CSV output path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "biozip: usage error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (comp_cmd->parsed()) return cmd_compress(comp, comp_ts->count() > 0, out);
    if (decomp_cmd->parsed()) return cmd_decompress(decomp, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
  } catch (const Error& e) {
    err << "biozip: error: " << to_string(e.code()) << ": " << one_line(e.what()) << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "biozip: error: " << one_line(e.what()) << '\n';
    return kExitFailure;
  }
  err << "biozip: usage error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace biozip::cli
