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

// Adaptive order-0 arithmetic coder over bytes, in the style of
// Witten, Neal and Cleary (CACM 1987) with 32-bit code registers.
//
// Model: 257 symbols (bytes 0..255, then end-of-stream = 256). Every
// frequency starts at 1 and grows by 1 after each coded symbol. When the
// total exceeds kMaxTotalFrequency every frequency f becomes max(1, f / 2).
// Cumulative ranges are taken in ascending symbol order.
//
// Coder: low/high are 32-bit, interval narrowing is done in 64-bit integer
// arithmetic, and the E3 (middle-half) underflow case is handled with a
// pending-bit counter. Termination emits one disambiguating bit plus pending
// bits; the stream is packed MSB first and the final byte is zero padded.
// Everything is integer-only, so output depends only on the input bytes.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace biozip::arith {

inline constexpr int kSymbolCount = 257;
inline constexpr int kEndOfStream = 256;
inline constexpr std::uint32_t kMaxTotalFrequency = 1u << 14;

/// Adaptive frequency table backed by a Fenwick tree.
class FrequencyModel {
 public:
  FrequencyModel();

  std::uint32_t total() const noexcept { return total_; }
  std::uint32_t frequency(int symbol) const noexcept { return freq_[symbol]; }
  /// Sum of frequencies of all symbols below `symbol`.
  std::uint32_t cumulative(int symbol) const noexcept;
  /// Symbol s with cumulative(s) <= target < cumulative(s) + frequency(s).
  int find(std::uint32_t target) const noexcept;
  void update(int symbol);

 private:
  static constexpr int kTreeSize = 512;

  void rebuild();

  std::array<std::uint32_t, kSymbolCount> freq_{};
  std::array<std::uint32_t, kTreeSize + 1> tree_{};
  std::uint32_t total_ = 0;
};

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> input);

/// Decodes until the end-of-stream symbol. Throws kMalformedPayload if more
/// than `max_output` bytes precede it or the stream length does not match
/// the length the encoder would have produced, and kPrematureEnd if the
/// stream runs out before the terminator.
std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> input,
                                     std::size_t max_output);

}  // namespace biozip::arith
