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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biozip {

/// Every failure raised by the library carries one of these codes.
enum class ErrorCode {
  kInvalidArgument,   // caller-supplied value outside its documented domain
  kDegenerateInput,   // e.g. constant signal with zero variance
  kIo,                // file could not be opened, read or written
  kParse,             // text input that is not a number
  kMalformedPayload,  // entropy payload inconsistent with its own framing
  kPrematureEnd,      // entropy payload ends before its terminator
  kBadMagic,
  kUnsupportedVersion,
  kTruncated,         // container shorter than its declared structure
  kInvalidHeader,     // container field outside its legal range
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace biozip
