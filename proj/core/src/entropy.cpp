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

#include "biozip/entropy.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "biozip/arith_coder.hpp"
#include "biozip/byte_io.hpp"
#include "biozip/error.hpp"

namespace biozip {
namespace {

bool is_positive_zero(double v) { return std::bit_cast<std::uint64_t>(v) == 0; }

void require_finite(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite coefficient at index " + std::to_string(i));
    }
  }
}

void require_codec(const EncodedPayload& payload, CodecKind codec) {
  if (payload.codec != codec) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("payload codec is not ") + std::string(to_string(codec)));
  }
}

}  // namespace

std::string_view to_string(CodecKind kind) noexcept {
  return kind == CodecKind::kRle ? "rle" : "arith";
}

TokenStream tokenize_zero_runs(std::span<const double> coefficients) {
  TokenStream stream;
  std::uint64_t run = 0;
  for (double c : coefficients) {
    if (is_positive_zero(c)) {
      ++run;
    } else {
      stream.tokens.push_back({run, c});
      run = 0;
    }
  }
  stream.trailing_zeros = run;
  return stream;
}

std::vector<double> expand_zero_runs(const TokenStream& stream) {
  std::uint64_t total = stream.trailing_zeros;
  for (const auto& token : stream.tokens) total += token.zero_run + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total));
  for (const auto& token : stream.tokens) {
    out.insert(out.end(), token.zero_run, 0.0);
    out.push_back(token.value);
  }
  out.insert(out.end(), stream.trailing_zeros, 0.0);
  return out;
}

EncodedPayload rle_encode(std::span<const double> coefficients) {
  require_finite(coefficients);
  const TokenStream stream = tokenize_zero_runs(coefficients);
  ByteWriter writer;
  writer.put_varint(stream.tokens.size());
  for (const auto& token : stream.tokens) {
    writer.put_varint(token.zero_run);
    writer.put_f64(token.value);
  }
  writer.put_varint(stream.trailing_zeros);
  return {CodecKind::kRle, std::move(writer).take(), coefficients.size()};
}

std::vector<double> rle_decode(const EncodedPayload& payload) {
  require_codec(payload, CodecKind::kRle);
  ByteReader reader(payload.bytes, ErrorCode::kMalformedPayload);
  const std::uint64_t expected = payload.decoded_length;

  // Parse and check the whole token stream before expanding anything, so the
  // output is only allocated once its length is known to be consistent.
  // Every token needs at least nine bytes, which bounds the count.
  const std::uint64_t token_count = reader.get_varint();
  if (token_count > reader.remaining() / 9 || token_count > expected) {
    throw Error(ErrorCode::kMalformedPayload,
                "RLE token count " + std::to_string(token_count) +
                    " is inconsistent with the payload");
  }
  auto too_long = [&] {
    return Error(ErrorCode::kMalformedPayload,
                 "RLE runs exceed the declared length " + std::to_string(expected));
  };

  TokenStream stream;
  stream.tokens.reserve(static_cast<std::size_t>(token_count));
  std::uint64_t produced = 0;
  for (std::uint64_t t = 0; t < token_count; ++t) {
    RleToken token;
    token.zero_run = reader.get_varint();
    token.value = reader.get_f64();
    if (is_positive_zero(token.value) || !std::isfinite(token.value)) {
      throw Error(ErrorCode::kMalformedPayload,
                  "RLE token " + std::to_string(t) + " carries an invalid value");
    }
    if (token.zero_run >= expected - produced) throw too_long();
    produced += token.zero_run + 1;
    stream.tokens.push_back(token);
  }
  stream.trailing_zeros = reader.get_varint();
  if (stream.trailing_zeros > expected - produced) throw too_long();
  produced += stream.trailing_zeros;

  if (produced != expected) {
    throw Error(ErrorCode::kMalformedPayload,
                "RLE payload decodes to " + std::to_string(produced) +
                    " values, expected " + std::to_string(expected));
  }
  if (!reader.at_end()) {
    throw Error(ErrorCode::kMalformedPayload,
                "RLE payload has " + std::to_string(reader.remaining()) + " trailing bytes");
  }
  return expand_zero_runs(stream);
}

EncodedPayload arith_encode(std::span<const double> coefficients) {
  require_finite(coefficients);
  ByteWriter writer;
  for (double c : coefficients) writer.put_f64(c);
  const auto raw = std::move(writer).take();
  return {CodecKind::kArith, arith::compress(raw), coefficients.size()};
}

std::vector<double> arith_decode(const EncodedPayload& payload) {
  require_codec(payload, CodecKind::kArith);
  if (payload.decoded_length > std::numeric_limits<std::size_t>::max() / 8) {
    throw Error(ErrorCode::kMalformedPayload, "declared length too large");
  }
  const auto raw = arith::decompress(payload.bytes, payload.decoded_length * 8);
  if (raw.size() % 8 != 0) {
    throw Error(ErrorCode::kMalformedPayload,
                "arithmetic payload decodes to " + std::to_string(raw.size()) +
                    " bytes, not a multiple of 8");
  }
  if (raw.size() != payload.decoded_length * 8) {
    throw Error(ErrorCode::kMalformedPayload,
                "arithmetic payload decodes to " + std::to_string(raw.size() / 8) +
                    " values, expected " + std::to_string(payload.decoded_length));
  }
  ByteReader reader(raw, ErrorCode::kMalformedPayload);
  std::vector<double> out(payload.decoded_length);
  for (auto& v : out) {
    v = reader.get_f64();
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kMalformedPayload, "arithmetic payload holds a non-finite value");
    }
  }
  return out;
}

EncodedPayload encode(CodecKind codec, std::span<const double> coefficients) {
  return codec == CodecKind::kRle ? rle_encode(coefficients) : arith_encode(coefficients);
}

std::vector<double> decode(const EncodedPayload& payload) {
  return payload.codec == CodecKind::kRle ? rle_decode(payload) : arith_decode(payload);
}

}  // namespace biozip
