#include "sgclass/error.hpp"

#include "sgclass/arith.hpp"

namespace sgclass {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kEmptyInput: return "EMPTY_INPUT";
    case ErrorCode::kNotPointed: return "NOT_POINTED";
    case ErrorCode::kNotSimplicial: return "NOT_SIMPLICIAL";
    case ErrorCode::kRayNotInGroup: return "RAY_NOT_IN_GROUP";
    case ErrorCode::kInconsistentGrading: return "INCONSISTENT_GRADING";
    case ErrorCode::kRaysNotDegreeOne: return "RAYS_NOT_DEGREE_ONE";
    case ErrorCode::kHorizonTooSmall: return "HORIZON_TOO_SMALL";
    case ErrorCode::kNotCertified: return "NOT_CERTIFIED";
    case ErrorCode::kUnsupportedDimension: return "UNSUPPORTED_DIMENSION";
    case ErrorCode::kNotInGroup: return "NOT_IN_GROUP";
    case ErrorCode::kNotInSemigroup: return "NOT_IN_SEMIGROUP";
    case ErrorCode::kNotCohenMacaulay: return "NOT_CM";
    case ErrorCode::kBoxTooSmall: return "BOX_TOO_SMALL";
    case ErrorCode::kNonpolynomialNumerator: return "NONPOLYNOMIAL_NUMERATOR";
    case ErrorCode::kNotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::kPrincipalIdeal: return "PRINCIPAL_IDEAL";
    case ErrorCode::kBadParams: return "BAD_PARAMS";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kUnknownTheorem: return "UNKNOWN_THEOREM";
    case ErrorCode::kArithmeticOverflow: return "ARITHMETIC_OVERFLOW";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void throw_overflow(const char* op) {
  throw Error(ErrorCode::kArithmeticOverflow, std::string("64-bit overflow in ") + op);
}

}  // namespace sgclass
