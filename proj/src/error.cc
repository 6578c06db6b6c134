// Copyright 2026 The rigidcx Authors
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

#include "rigidcx/error.h"

namespace rigidcx {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kFieldMismatch: return "field_mismatch";
    case ErrorCode::kSingularMatrix: return "singular_matrix";
    case ErrorCode::kZeroDivisor: return "zero_divisor";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kUnknownVertex: return "unknown_vertex";
    case ErrorCode::kUnknownSimplex: return "unknown_simplex";
    case ErrorCode::kPartialAssignment: return "partial_assignment";
    case ErrorCode::kNonSimpleGraph: return "non_simple_graph";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kNotPowerOfFive: return "not_power_of_five";
    case ErrorCode::kBoundExceeded: return "bound_exceeded";
    case ErrorCode::kNoFlip: return "no_flip";
  }
  return "unknown";
}

}  // namespace rigidcx
