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

// Lossless back ends for coefficient streams.
//
// RLE payload layout:
//   varint token_count
//   token_count x { varint zero_run, f64le value }
//   varint trailing_zeros
// A "zero" is the bit pattern of +0.0 only; -0.0 travels as a token value so
// that every input round-trips bit for bit.
//
// ARITH payload: the coefficients as consecutive f64le bytes, compressed with
// the adaptive order-0 coder in arith_coder.hpp.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace biozip {

enum class CodecKind : std::uint8_t { kRle = 0, kArith = 1 };

std::string_view to_string(CodecKind kind) noexcept;

struct EncodedPayload {
  CodecKind codec = CodecKind::kRle;
  std::vector<std::uint8_t> bytes;
  std::size_t decoded_length = 0;  // coefficient count

  friend bool operator==(const EncodedPayload&, const EncodedPayload&) = default;
};

struct RleToken {
  std::uint64_t zero_run = 0;
  double value = 0.0;
};

struct TokenStream {
  std::vector<RleToken> tokens;
  std::uint64_t trailing_zeros = 0;
};

TokenStream tokenize_zero_runs(std::span<const double> coefficients);
std::vector<double> expand_zero_runs(const TokenStream& stream);

EncodedPayload rle_encode(std::span<const double> coefficients);
std::vector<double> rle_decode(const EncodedPayload& payload);

EncodedPayload arith_encode(std::span<const double> coefficients);
std::vector<double> arith_decode(const EncodedPayload& payload);

EncodedPayload encode(CodecKind codec, std::span<const double> coefficients);
std::vector<double> decode(const EncodedPayload& payload);

}  // namespace biozip
