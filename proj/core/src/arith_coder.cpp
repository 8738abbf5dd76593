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

#include "biozip/arith_coder.hpp"

#include <algorithm>
#include <string>

#include "biozip/error.hpp"

namespace biozip::arith {
namespace {

constexpr int kCodeBits = 32;
constexpr std::uint64_t kTop = (std::uint64_t{1} << kCodeBits) - 1;
constexpr std::uint64_t kFirstQuarter = kTop / 4 + 1;
constexpr std::uint64_t kHalf = 2 * kFirstQuarter;
constexpr std::uint64_t kThirdQuarter = 3 * kFirstQuarter;

// Total frequency must stay far enough below the quarter range that every
// symbol keeps a non-empty sub-interval.
static_assert(kMaxTotalFrequency <= kFirstQuarter);

class BitSink {
 public:
  void put(unsigned bit) {
    acc_ = static_cast<std::uint8_t>((acc_ << 1) | bit);
    if (++count_ == 8) {
      bytes_.push_back(acc_);
      acc_ = 0;
      count_ = 0;
    }
  }

  void put_with_pending(unsigned bit, std::uint64_t& pending) {
    put(bit);
    for (; pending > 0; --pending) put(bit ^ 1u);
  }

  std::vector<std::uint8_t> finish() && {
    if (count_ > 0) bytes_.push_back(static_cast<std::uint8_t>(acc_ << (8 - count_)));
    return std::move(bytes_);
  }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint8_t acc_ = 0;
  int count_ = 0;
};

// Past the end of the buffer the source yields zeros. A well-formed stream
// never needs more than kCodeBits - 2 of them, so asking for more means the
// terminator is missing.
class BitSource {
 public:
  explicit BitSource(std::span<const std::uint8_t> data) : data_(data) {}

  unsigned get() {
    const std::uint64_t byte = pos_ >> 3;
    unsigned bit = 0;
    if (byte < data_.size()) {
      bit = (data_[byte] >> (7 - (pos_ & 7))) & 1u;
    } else if (pos_ >= 8 * data_.size() + (kCodeBits - 2)) {
      throw Error(ErrorCode::kPrematureEnd,
                  "arithmetic payload ends before the end-of-stream symbol");
    }
    ++pos_;
    return bit;
  }

  std::uint64_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> data_;
  std::uint64_t pos_ = 0;
};

}  // namespace

FrequencyModel::FrequencyModel() {
  freq_.fill(1);
  rebuild();
}

void FrequencyModel::rebuild() {
  tree_.fill(0);
  total_ = 0;
  for (int s = 0; s < kSymbolCount; ++s) {
    total_ += freq_[s];
    for (int i = s + 1; i <= kTreeSize; i += i & -i) tree_[i] += freq_[s];
  }
}

std::uint32_t FrequencyModel::cumulative(int symbol) const noexcept {
  std::uint32_t sum = 0;
  for (int i = symbol; i > 0; i -= i & -i) sum += tree_[i];
  return sum;
}

int FrequencyModel::find(std::uint32_t target) const noexcept {
  // Largest prefix length whose sum is <= target; that prefix length is the
  // symbol index.
  int pos = 0;
  for (int step = kTreeSize; step > 0; step >>= 1) {
    const int next = pos + step;
    if (next <= kTreeSize && tree_[next] <= target) {
      pos = next;
      target -= tree_[next];
    }
  }
  return pos;
}

void FrequencyModel::update(int symbol) {
  ++freq_[symbol];
  ++total_;
  if (total_ > kMaxTotalFrequency) {
    for (auto& f : freq_) f = std::max<std::uint32_t>(1, f / 2);
    rebuild();
    return;
  }
  for (int i = symbol + 1; i <= kTreeSize; i += i & -i) ++tree_[i];
}

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> input) {
  FrequencyModel model;
  BitSink sink;
  std::uint64_t low = 0;
  std::uint64_t high = kTop;
  std::uint64_t pending = 0;

  auto encode_symbol = [&](int symbol) {
    const std::uint64_t range = high - low + 1;
    const std::uint64_t total = model.total();
    const std::uint64_t cum_lo = model.cumulative(symbol);
    const std::uint64_t cum_hi = cum_lo + model.frequency(symbol);
    high = low + range * cum_hi / total - 1;
    low = low + range * cum_lo / total;
    for (;;) {
      if (high < kHalf) {
        sink.put_with_pending(0, pending);
      } else if (low >= kHalf) {
        sink.put_with_pending(1, pending);
        low -= kHalf;
        high -= kHalf;
      } else if (low >= kFirstQuarter && high < kThirdQuarter) {
        ++pending;
        low -= kFirstQuarter;
        high -= kFirstQuarter;
      } else {
        break;
      }
      low = 2 * low;
      high = 2 * high + 1;
    }
    model.update(symbol);
  };

  for (std::uint8_t b : input) encode_symbol(b);
  encode_symbol(kEndOfStream);

  // Two more bits pin the final value inside [low, high].
  ++pending;
  sink.put_with_pending(low < kFirstQuarter ? 0 : 1, pending);
  return std::move(sink).finish();
}

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> input,
                                     std::size_t max_output) {
  FrequencyModel model;
  BitSource source(input);
  std::uint64_t low = 0;
  std::uint64_t high = kTop;
  std::uint64_t value = 0;
  for (int i = 0; i < kCodeBits; ++i) value = (value << 1) | source.get();

  // Renormalization shifts performed so far; the encoder emitted exactly
  // this many bits (counting pending ones) before its two-bit terminator.
  std::uint64_t shifts = 0;
  std::vector<std::uint8_t> out;
  for (;;) {
    const std::uint64_t range = high - low + 1;
    const std::uint64_t total = model.total();
    if (value < low || value > high) {
      throw Error(ErrorCode::kMalformedPayload, "arithmetic decoder state out of range");
    }
    const std::uint64_t scaled = ((value - low + 1) * total - 1) / range;
    if (scaled >= total) {
      throw Error(ErrorCode::kMalformedPayload, "arithmetic decoder state out of range");
    }
    const int symbol = model.find(static_cast<std::uint32_t>(scaled));
    const std::uint64_t cum_lo = model.cumulative(symbol);
    const std::uint64_t cum_hi = cum_lo + model.frequency(symbol);
    high = low + range * cum_hi / total - 1;
    low = low + range * cum_lo / total;
    for (;;) {
      if (high < kHalf) {
        // nothing to subtract
      } else if (low >= kHalf) {
        low -= kHalf;
        high -= kHalf;
        value -= kHalf;
      } else if (low >= kFirstQuarter && high < kThirdQuarter) {
        low -= kFirstQuarter;
        high -= kFirstQuarter;
        value -= kFirstQuarter;
      } else {
        break;
      }
      low = 2 * low;
      high = 2 * high + 1;
      value = (value << 1) | source.get();
      ++shifts;
    }
    if (symbol == kEndOfStream) break;
    if (out.size() == max_output) {
      throw Error(ErrorCode::kMalformedPayload,
                  "arithmetic payload decodes to more than " +
                      std::to_string(max_output) + " bytes");
    }
    out.push_back(static_cast<std::uint8_t>(symbol));
    model.update(symbol);
  }

  const std::uint64_t expected_bytes = (shifts + 2 + 7) / 8;
  if (expected_bytes != input.size()) {
    throw Error(ErrorCode::kMalformedPayload,
                "arithmetic payload is " + std::to_string(input.size()) +
                    " bytes but its terminator implies " +
                    std::to_string(expected_bytes));
  }
  return out;
}

}  // namespace biozip::arith
