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

// The .bzp container. All integers little-endian.
//
//   offset size field
//   0      4    magic "BZP1"
//   4      1    version (= 1)
//   5      1    flags: bit0 transform (0 DCT, 1 DWT), bit1 codec (0 RLE,
//               1 ARITH), other bits zero
//   6      1    dwt_levels (0 for DCT, 1..24 for DWT)
//   7      1    reserved (= 0)
//   8      8    mu (f64)
//   16     8    sigma (f64, > 0)
//   24     8    sample_rate (f64, > 0)
//   32     4    segment_count (u32, >= 1)
//   36          segment table, per segment:
//                 u32 original_length, u32 pad_length, u32 payload_length,
//                 (original_length + pad_length <= 2^28)
//                 payload bytes
//
// No bytes may follow the last segment.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "biozip/entropy.hpp"
#include "biozip/preprocess.hpp"
#include "biozip/transform.hpp"

namespace biozip {

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 36;
inline constexpr std::size_t kSegmentHeaderSize = 12;
/// Upper bound on original + pad samples in one segment (2 GiB of f64).
/// Decoders allocate the declared length, so larger values are refused.
inline constexpr std::uint32_t kMaxSegmentSamples = 1u << 28;

struct CompressedSegment {
  std::uint32_t original_length = 0;  // real samples, before padding
  std::uint32_t pad_length = 0;       // zero samples appended for the DWT
  EncodedPayload payload;             // decodes to original + pad values

  friend bool operator==(const CompressedSegment&,
                         const CompressedSegment&) = default;
};

struct CompressedFile {
  TransformKind transform = TransformKind::kDct;
  CodecKind codec = CodecKind::kRle;
  std::uint8_t dwt_levels = 0;
  StandardizationParams params;
  double sample_rate = 0.0;
  std::vector<CompressedSegment> segments;

  std::size_t segment_count() const noexcept { return segments.size(); }
  std::size_t sample_count() const noexcept;

  friend bool operator==(const CompressedFile&, const CompressedFile&) = default;
};

/// Structural checks shared by serialize and deserialize; throws
/// kInvalidHeader naming the offending field or segment.
void validate(const CompressedFile& file);

std::vector<std::uint8_t> serialize(const CompressedFile& file);
CompressedFile deserialize(std::span<const std::uint8_t> bytes);

/// Exact length of serialize(file), computed without serializing.
std::size_t compressed_size(const CompressedFile& file);

}  // namespace biozip
