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

#include "meanpart/error.hpp"

namespace meanpart {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidMatrix: return "invalid-matrix";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kSymmetricCenter: return "symmetric-center";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kEllTooLarge: return "ell-too-large";
    case ErrorCode::kEmptySet: return "empty-set";
    case ErrorCode::kRejectionExhausted: return "rejection-exhausted";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kLabelOutOfRange: return "label-out-of-range";
    case ErrorCode::kIoError: return "io-error";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kUnknownCommand: return "unknown-command";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace meanpart
