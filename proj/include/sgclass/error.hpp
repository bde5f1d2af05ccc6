#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgclass {

enum class ErrorCode {
  kDimensionMismatch,
  kEmptyInput,
  kNotPointed,
  kNotSimplicial,
  kRayNotInGroup,
  kInconsistentGrading,
  kRaysNotDegreeOne,
  kHorizonTooSmall,
  kNotCertified,
  kUnsupportedDimension,
  kNotInGroup,
  kNotInSemigroup,
  kNotCohenMacaulay,
  kBoxTooSmall,
  kNonpolynomialNumerator,
  kNotApplicable,
  kPrincipalIdeal,
  kBadParams,
  kParseError,
  kUnknownTheorem,
  kArithmeticOverflow,
};

/// Stable machine-readable name, e.g. "NOT_SIMPLICIAL".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgclass
