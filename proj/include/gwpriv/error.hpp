// Copyright 2026 The gwpriv Authors
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
#ifndef GWPRIV_ERROR_HPP_
#define GWPRIV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwpriv {

enum class ErrorCode {
  kNegativeMass,
  kNotNormalized,
  kShapeMismatch,
  kEmptySelection,
  kOverlappingSelections,
  kZeroProbabilityEvent,
  kParseError,
  kMissingAuxAxis,
  kInvalidPmf,
  kKTooSmall,
  kSupportTooLarge,
  kWitnessInfeasible,
  kCodebookTooLarge,
  kEnumerationTooLarge,
  kInvalidArgument,
  kInternalConsistency,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every domain failure in the library is reported through this type. Outcomes
// that are counted rather than raised (encoder/decoder failures, optimizer
// non-convergence) never throw.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gwpriv

#endif  // GWPRIV_ERROR_HPP_
