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

#include "biozip/byte_io.hpp"

#include <bit>
#include <string>

namespace biozip {

void ByteWriter::put_u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_f64(double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    bytes_.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  }
}

void ByteWriter::put_varint(std::uint64_t v) {
  while (v >= 0x80) {
    bytes_.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  bytes_.push_back(static_cast<std::uint8_t>(v));
}

void ByteWriter::put_bytes(std::span<const std::uint8_t> data) {
  bytes_.insert(bytes_.end(), data.begin(), data.end());
}

void ByteReader::require(std::size_t n, const char* what) const {
  if (remaining() < n) {
    throw Error(short_read_code_,
                std::string("unexpected end of data reading ") + what +
                    " at offset " + std::to_string(pos_));
  }
}

std::uint8_t ByteReader::get_u8() {
  require(1, "u8");
  return data_[pos_++];
}

std::uint32_t ByteReader::get_u32() {
  require(4, "u32");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{data_[pos_++]} << (8 * i);
  return v;
}

double ByteReader::get_f64() {
  require(8, "f64");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t{data_[pos_++]} << (8 * i);
  return std::bit_cast<double>(bits);
}

std::uint64_t ByteReader::get_varint() {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    require(1, "varint");
    const std::uint8_t b = data_[pos_++];
    const std::uint64_t chunk = b & 0x7f;
    // The tenth byte may only contribute the top bit.
    if (shift == 63 && chunk > 1) {
      throw Error(ErrorCode::kMalformedPayload, "varint overflows 64 bits");
    }
    v |= chunk << shift;
    if ((b & 0x80) == 0) return v;
  }
  throw Error(ErrorCode::kMalformedPayload, "varint longer than 10 bytes");
}

std::span<const std::uint8_t> ByteReader::get_bytes(std::size_t n) {
  require(n, "byte block");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

}  // namespace biozip
