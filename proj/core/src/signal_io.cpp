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

#include "biozip/signal_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>
#include <random>
#include <string>
#include <string_view>

#include "biozip/byte_io.hpp"
#include "biozip/error.hpp"

namespace biozip {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading " + path.string());
  return bytes;
}

std::vector<double> parse_csv(std::string_view text, const std::string& name) {
  std::vector<double> samples;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    double v = 0.0;
    if (!parse_double(line, v)) {
      // A single non-numeric first row is a header.
      if (line_no == 1) continue;
      throw Error(ErrorCode::kParse, name + ":" + std::to_string(line_no) +
                                         ": non-numeric cell '" +
                                         std::string(line) + "'");
    }
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  name + ":" + std::to_string(line_no) + ": non-finite value");
    }
    samples.push_back(v);
  }
  return samples;
}

// Uniform in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void validate_signal(const RawSignal& signal) {
  if (signal.samples.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "signal is empty");
  }
  if (!(signal.sample_rate > 0.0) || !std::isfinite(signal.sample_rate)) {
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  }
  for (std::size_t i = 0; i < signal.samples.size(); ++i) {
    if (!std::isfinite(signal.samples[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite sample at index " + std::to_string(i));
    }
  }
}

RawSignal read_signal(const std::filesystem::path& path, SignalFormat format,
                      double sample_rate) {
  const auto bytes = read_file(path);
  RawSignal signal;
  signal.sample_rate = sample_rate;
  if (format == SignalFormat::kCsv) {
    const std::string_view text(reinterpret_cast<const char*>(bytes.data()),
                                bytes.size());
    signal.samples = parse_csv(text, path.string());
  } else {
    if (bytes.size() % 8 != 0) {
      throw Error(ErrorCode::kParse, path.string() + ": length " +
                                         std::to_string(bytes.size()) +
                                         " is not a multiple of 8");
    }
    ByteReader reader(bytes, ErrorCode::kParse);
    signal.samples.reserve(bytes.size() / 8);
    while (!reader.at_end()) signal.samples.push_back(reader.get_f64());
  }
  validate_signal(signal);
  return signal;
}

void write_signal(const RawSignal& signal, const std::filesystem::path& path,
                  SignalFormat format) {
  validate_signal(signal);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  if (format == SignalFormat::kCsv) {
    std::array<char, 32> buf{};
    for (double v : signal.samples) {
      const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
      out.write(buf.data(), ptr - buf.data());
      out.put('\n');
    }
  } else {
    ByteWriter writer;
    for (double v : signal.samples) writer.put_f64(v);
    const auto bytes = std::move(writer).take();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

RawSignal synth_eeg(double duration_s, double sample_rate, std::uint64_t seed) {
  if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
    throw Error(ErrorCode::kInvalidArgument, "duration must be positive");
  }
  if (!(sample_rate >= kMinSynthSampleRate) || !std::isfinite(sample_rate)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample rate must be at least 64 Hz to represent the beta band");
  }
  const auto count = static_cast<std::size_t>(std::floor(duration_s * sample_rate));
  if (count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "duration yields no samples");
  }

  struct Band {
    double hz;
    double amplitude;
  };
  static constexpr std::array<Band, 4> kBands{{
      {2.0, 50.0},   // delta
      {6.0, 30.0},   // theta
      {10.0, 20.0},  // alpha
      {20.0, 10.0},  // beta
  }};
  constexpr double kNoiseSigma = 5.0;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  std::mt19937_64 rng(seed);
  std::array<double, kBands.size()> phase{};
  for (auto& p : phase) p = kTwoPi * uniform01(rng);

  RawSignal signal;
  signal.sample_rate = sample_rate;
  signal.samples.resize(count);
  double spare = 0.0;
  bool have_spare = false;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    double v = 0.0;
    for (std::size_t b = 0; b < kBands.size(); ++b) {
      v += kBands[b].amplitude * std::sin(kTwoPi * kBands[b].hz * t + phase[b]);
    }
    double gauss;
    if (have_spare) {
      gauss = spare;
      have_spare = false;
    } else {
      const double u1 = 1.0 - uniform01(rng);  // (0, 1]
      const double u2 = uniform01(rng);
      const double r = std::sqrt(-2.0 * std::log(u1));
      gauss = r * std::cos(kTwoPi * u2);
      spare = r * std::sin(kTwoPi * u2);
      have_spare = true;
    }
    signal.samples[i] = v + kNoiseSigma * gauss;
  }
  return signal;
}

}  // namespace biozip
