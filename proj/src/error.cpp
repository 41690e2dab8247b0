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
#include "gwpriv/error.hpp"

namespace gwpriv {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeMass: return "NegativeMass";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kOverlappingSelections: return "OverlappingSelections";
    case ErrorCode::kZeroProbabilityEvent: return "ZeroProbabilityEvent";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingAuxAxis: return "MissingAuxAxis";
    case ErrorCode::kInvalidPmf: return "InvalidPmf";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kWitnessInfeasible: return "WitnessInfeasible";
    case ErrorCode::kCodebookTooLarge: return "CodebookTooLarge";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace gwpriv
