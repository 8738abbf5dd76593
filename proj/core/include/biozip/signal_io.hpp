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

// Signal ingestion: CSV and raw little-endian binary64 files, plus a seeded
// synthetic EEG-like generator used for fixtures and sweeps.

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace biozip {

inline constexpr double kDefaultSampleRate = 256.0;

/// Lowest rate at which synth_eeg can still represent its 20 Hz beta band
/// with comfortable margin.
inline constexpr double kMinSynthSampleRate = 64.0;

struct RawSignal {
  std::vector<double> samples;
  double sample_rate = kDefaultSampleRate;  // Hz

  std::size_t size() const noexcept { return samples.size(); }
};

enum class SignalFormat {
  kCsv,       // one decimal value per line, optional non-numeric header row
  kRawF64Le,  // headerless IEEE-754 binary64, little-endian
};

/// Throws kInvalidArgument unless the signal is non-empty, every sample is
/// finite and the rate is positive and finite.
void validate_signal(const RawSignal& signal);

RawSignal read_signal(const std::filesystem::path& path, SignalFormat format,
                      double sample_rate = kDefaultSampleRate);

/// CSV output uses shortest round-trip formatting, so reading it back
/// reproduces every double exactly.
void write_signal(const RawSignal& signal, const std::filesystem::path& path,
                  SignalFormat format);

/// Deterministic EEG-like test signal: delta (2 Hz, 50), theta (6 Hz, 30),
/// alpha (10 Hz, 20) and beta (20 Hz, 10) sinusoids with seeded phases,
/// plus white Gaussian noise of standard deviation 5.
///
/// Randomness comes from std::mt19937_64 (whose output sequence is fixed by
/// the C++ standard) mapped to doubles and Gaussians by hand, so the result
/// is identical across standard libraries. Phases are drawn first, one per
/// band in the order above, then one Box-Muller pair per two samples.
RawSignal synth_eeg(double duration_s, double sample_rate, std::uint64_t seed);

}  // namespace biozip
