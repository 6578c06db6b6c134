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

#ifndef RIGIDCX_ERROR_H_
#define RIGIDCX_ERROR_H_

#include <stdexcept>
#include <string>

namespace rigidcx {

// Numeric values are mirrored by rcx_status in the C API.
enum class ErrorCode {
  kInvalidArgument = 1,
  kBudgetExceeded = 2,
  kFieldMismatch = 3,
  kSingularMatrix = 4,
  kZeroDivisor = 5,
  kParse = 6,
  kUnknownVertex = 7,
  kUnknownSimplex = 8,
  kPartialAssignment = 9,
  kNonSimpleGraph = 10,
  kCapExceeded = 11,
  kNotPowerOfFive = 12,
  kBoundExceeded = 13,
  kNoFlip = 14,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rigidcx

#endif  // RIGIDCX_ERROR_H_
