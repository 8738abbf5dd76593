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

// Little-endian primitive writers/readers shared by the payload and
// container formats. ByteReader never reads outside its span; every short
// read throws with the error code it was constructed with.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "biozip/error.hpp"

namespace biozip {

class ByteWriter {
 public:
  void put_u8(std::uint8_t v) { bytes_.push_back(v); }
  void put_u32(std::uint32_t v);
  void put_f64(double v);
  /// Unsigned LEB128.
  void put_varint(std::uint64_t v);
  void put_bytes(std::span<const std::uint8_t> data);

  std::size_t size() const noexcept { return bytes_.size(); }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> data, ErrorCode short_read_code)
      : data_(data), short_read_code_(short_read_code) {}

  std::uint8_t get_u8();
  std::uint32_t get_u32();
  double get_f64();
  /// Rejects encodings longer than ten bytes or overflowing 64 bits.
  std::uint64_t get_varint();
  std::span<const std::uint8_t> get_bytes(std::size_t n);

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return data_.size() - pos_; }
  bool at_end() const noexcept { return pos_ == data_.size(); }

 private:
  void require(std::size_t n, const char* what) const;

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
  ErrorCode short_read_code_;
};

}  // namespace biozip
