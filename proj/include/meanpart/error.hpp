// Copyright 2026 The Meanpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace meanpart {

// Stable error categories. The numeric values are mirrored by mp_status in
// meanpart.h and must not be reordered.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kInvalidMatrix = 2,
  kDimensionMismatch = 3,
  kIndexOutOfRange = 4,
  kSymmetricCenter = 5,
  kBudgetExceeded = 6,
  kEllTooLarge = 7,
  kEmptySet = 8,
  kRejectionExhausted = 9,
  kParseError = 10,
  kLabelOutOfRange = 11,
  kIoError = 12,
  kInvalidConfig = 13,
  kUnknownCommand = 14,
  kInternal = 15,
};

// Kebab-case name used in machine-readable error reports.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace meanpart
