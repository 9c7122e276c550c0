// Copyright 2026 The Submod Authors.
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

#include "submod/errors.h"

namespace submod {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kCapExceeded:
      return "CapExceeded";
    case ErrorCode::kNumericalInconsistency:
      return "NumericalInconsistency";
    case ErrorCode::kNoConvergence:
      return "NoConvergence";
    case ErrorCode::kUnbounded:
      return "Unbounded";
    case ErrorCode::kNegativeScale:
      return "NegativeScale";
    case ErrorCode::kNotConcave:
      return "NotConcave";
    case ErrorCode::kNotZeroAtZero:
      return "NotZeroAtZero";
    case ErrorCode::kNotPositiveDefinite:
      return "NotPositiveDefinite";
    case ErrorCode::kMonotonicityRequired:
      return "MonotonicityRequired";
    case ErrorCode::kRecursionOverflow:
      return "RecursionOverflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace submod
