// Copyright 2026 The fgeom Authors.
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

#include "fgeom/error.hpp"

namespace fgeom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotGenerating: return "NotGenerating";
    case ErrorCode::kExhaustionLimit: return "ExhaustionLimit";
    case ErrorCode::kPreconditionLinesTooShort: return "PreconditionLinesTooShort";
    case ErrorCode::kNotConstantOnClasses: return "NotConstantOnClasses";
    case ErrorCode::kNotProjective: return "NotProjective";
    case ErrorCode::kZeroMap: return "ZeroMap";
    case ErrorCode::kDimensionTooLow: return "DimensionTooLow";
    case ErrorCode::kEqualHyperplanes: return "EqualHyperplanes";
    case ErrorCode::kNoEmbedding: return "NoEmbedding";
    case ErrorCode::kNoIrreducibleForm: return "NoIrreducibleForm";
    case ErrorCode::kImageInLine: return "ImageInLine";
    case ErrorCode::kImageInPlane: return "ImageInPlane";
    case ErrorCode::kExceptionalNotFlat: return "ExceptionalNotFlat";
    case ErrorCode::kSigmaNotHomomorphism: return "SigmaNotHomomorphism";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
    case ErrorCode::kReductionsDisagree: return "ReductionsDisagree";
    case ErrorCode::kLiftInconsistent: return "LiftInconsistent";
    case ErrorCode::kNotProportional: return "NotProportional";
    case ErrorCode::kNoBasePair: return "NoBasePair";
    case ErrorCode::kNotEnoughPoints: return "NotEnoughPoints";
    case ErrorCode::kFieldClauseViolated: return "FieldClauseViolated";
    case ErrorCode::kInconsistentExtension: return "InconsistentExtension";
    case ErrorCode::kCapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace fgeom
