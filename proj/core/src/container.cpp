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

#include "biozip/container.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "biozip/byte_io.hpp"
#include "biozip/error.hpp"

namespace biozip {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'B', 'Z', 'P', '1'};
constexpr std::uint8_t kFlagDwt = 0x01;
constexpr std::uint8_t kFlagArith = 0x02;
constexpr std::uint32_t kU32Max = std::numeric_limits<std::uint32_t>::max();

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidHeader, what);
}

std::string segment_label(std::size_t index) {
  return "segment " + std::to_string(index);
}

}  // namespace

std::size_t CompressedFile::sample_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : segments) n += s.original_length;
  return n;
}

void validate(const CompressedFile& file) {
  if (!file.params.valid()) invalid("mu must be finite and sigma positive");
  if (!(file.sample_rate > 0.0) || !std::isfinite(file.sample_rate)) {
    invalid("sample rate must be positive");
  }
  if (file.segments.empty()) invalid("container holds no segments");
  if (file.segments.size() > kU32Max) invalid("too many segments");

  const bool dwt = file.transform == TransformKind::kDwt;
  if (dwt && (file.dwt_levels < 1 || file.dwt_levels > kMaxDwtLevels)) {
    invalid("DWT levels " + std::to_string(file.dwt_levels) + " out of range");
  }
  if (!dwt && file.dwt_levels != 0) invalid("DCT container must record zero DWT levels");

  for (std::size_t i = 0; i < file.segments.size(); ++i) {
    const auto& seg = file.segments[i];
    if (seg.original_length == 0) invalid(segment_label(i) + " is empty");
    if (seg.payload.codec != file.codec) invalid(segment_label(i) + " codec disagrees with header");
    if (seg.payload.bytes.size() > kU32Max) invalid(segment_label(i) + " payload too large");
    const std::uint64_t padded = std::uint64_t{seg.original_length} + seg.pad_length;
    if (padded > kMaxSegmentSamples) {
      invalid(segment_label(i) + " exceeds " + std::to_string(kMaxSegmentSamples) + " samples");
    }
    if (seg.payload.decoded_length != padded) {
      invalid(segment_label(i) + " payload length disagrees with its header");
    }
    if (!dwt) {
      if (seg.pad_length != 0) invalid(segment_label(i) + " has padding under DCT");
    } else {
      const std::uint64_t block = std::uint64_t{1} << file.dwt_levels;
      if (seg.pad_length >= block || padded % block != 0) {
        invalid(segment_label(i) + " padding does not align to 2^levels");
      }
    }
  }
}

std::vector<std::uint8_t> serialize(const CompressedFile& file) {
  validate(file);
  ByteWriter w;
  w.put_bytes(kMagic);
  w.put_u8(kContainerVersion);
  std::uint8_t flags = 0;
  if (file.transform == TransformKind::kDwt) flags |= kFlagDwt;
  if (file.codec == CodecKind::kArith) flags |= kFlagArith;
  w.put_u8(flags);
  w.put_u8(file.dwt_levels);
  w.put_u8(0);
  w.put_f64(file.params.mu);
  w.put_f64(file.params.sigma);
  w.put_f64(file.sample_rate);
  w.put_u32(static_cast<std::uint32_t>(file.segments.size()));
  for (const auto& seg : file.segments) {
    w.put_u32(seg.original_length);
    w.put_u32(seg.pad_length);
    w.put_u32(static_cast<std::uint32_t>(seg.payload.bytes.size()));
    w.put_bytes(seg.payload.bytes);
  }
  return std::move(w).take();
}

CompressedFile deserialize(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes, ErrorCode::kTruncated);
  if (bytes.size() < kMagic.size()) {
    throw Error(ErrorCode::kTruncated, "container shorter than its magic");
  }
  const auto magic = r.get_bytes(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw Error(ErrorCode::kBadMagic, "not a BZP1 container");
  }
  if (bytes.size() < kContainerHeaderSize) {
    throw Error(ErrorCode::kTruncated, "container header is truncated");
  }
  const std::uint8_t version = r.get_u8();
  if (version != kContainerVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "container version " + std::to_string(version) + " is not supported");
  }
  const std::uint8_t flags = r.get_u8();
  if ((flags & ~(kFlagDwt | kFlagArith)) != 0) invalid("unknown flag bits set");

  CompressedFile file;
  file.transform = (flags & kFlagDwt) ? TransformKind::kDwt : TransformKind::kDct;
  file.codec = (flags & kFlagArith) ? CodecKind::kArith : CodecKind::kRle;
  file.dwt_levels = r.get_u8();
  if (r.get_u8() != 0) invalid("reserved byte is not zero");
  file.params.mu = r.get_f64();
  file.params.sigma = r.get_f64();
  file.sample_rate = r.get_f64();
  if (!(file.params.sigma > 0.0)) invalid("sigma must be positive");
  const std::uint32_t count = r.get_u32();
  if (count == 0) invalid("container holds no segments");

  file.segments.reserve(std::min<std::size_t>(count, r.remaining() / kSegmentHeaderSize));
  for (std::uint32_t i = 0; i < count; ++i) {
    if (r.remaining() < kSegmentHeaderSize) {
      throw Error(ErrorCode::kTruncated, segment_label(i) + " header is truncated");
    }
    CompressedSegment seg;
    seg.original_length = r.get_u32();
    seg.pad_length = r.get_u32();
    const std::uint32_t payload_length = r.get_u32();
    if (payload_length > r.remaining()) {
      throw Error(ErrorCode::kTruncated,
                  segment_label(i) + " payload is truncated (" +
                      std::to_string(payload_length) + " bytes declared, " +
                      std::to_string(r.remaining()) + " available)");
    }
    const auto payload = r.get_bytes(payload_length);
    seg.payload.codec = file.codec;
    seg.payload.bytes.assign(payload.begin(), payload.end());
    seg.payload.decoded_length = std::size_t{seg.original_length} + seg.pad_length;
    file.segments.push_back(std::move(seg));
  }
  if (!r.at_end()) {
    invalid(std::to_string(r.remaining()) + " trailing bytes after the last segment");
  }
  validate(file);
  return file;
}

std::size_t compressed_size(const CompressedFile& file) {
  std::size_t size = kContainerHeaderSize;
  for (const auto& seg : file.segments) size += kSegmentHeaderSize + seg.payload.bytes.size();
  return size;
}

}  // namespace biozip
