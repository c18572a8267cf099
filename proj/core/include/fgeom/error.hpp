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

#ifndef FGEOM_ERROR_HPP_
#define FGEOM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgeom {

enum class ErrorCode {
  kDivisionByZero,
  kFieldMismatch,
  kSizeLimit,
  kInvalidArgument,
  kParseError,
  kNotGenerating,
  kExhaustionLimit,
  kPreconditionLinesTooShort,
  kNotConstantOnClasses,
  kNotProjective,
  kZeroMap,
  kDimensionTooLow,
  kEqualHyperplanes,
  kNoEmbedding,
  kNoIrreducibleForm,
  kImageInLine,
  kImageInPlane,
  kExceptionalNotFlat,
  kSigmaNotHomomorphism,
  kVerificationFailed,
  kInternalContradiction,
  kReductionsDisagree,
  kLiftInconsistent,
  kNotProportional,
  kNoBasePair,
  kNotEnoughPoints,
  kFieldClauseViolated,
  kInconsistentExtension,
  kCapExceeded,
};

// Stable identifier used in reports, e.g. "ImageInLine".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fgeom

#endif  // FGEOM_ERROR_HPP_
