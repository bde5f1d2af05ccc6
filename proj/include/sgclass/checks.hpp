#pragma once

// Theorem validators over classification reports. Each returns PASS when
// its hypothesis holds and the conclusion is verified, FAIL when the
// hypothesis holds and the conclusion does not, VACUOUS otherwise.

#include <string>
#include <string_view>
#include <vector>

#include "sgclass/report.hpp"

namespace sgclass {

enum class CheckId {
  kTraceInitialDegree,    // depth >= 2, extremal monomials in tr(I) => dim I_b >= 2
  kNearlyGorensteinTopH,  // non-Gorenstein, extremal monomials in tr(omega) => h_s >= 2
  kTypeTwoLevel,          // nearly Gorenstein of type 2 => level
  kLevelSocleOne,         // (almost Gorenstein and level) <=> s = 1
  kSocleTwoType,          // s = 2, non-level => type = h_1 + h_2
  kStandardAgNg,          // standard graded, s >= 2: AG and NG => Gorenstein
  kNonStandardAgNg,       // non-standard, dim = s = 2: AG => NG
  kSocleTwoFamily,        // dim = s = 2, non-level AG => NG with h = (1, n-1, n)
};

/// Accepts the command-line identifiers ("3.5", "3.6", "3.7", "5.1", "5.3",
/// "6.1", "6.2", "6.3") and the report key names. Throws UNKNOWN_THEOREM.
CheckId parse_check_id(std::string_view id);
/// Report key, e.g. "trace_initial_degree".
std::string_view check_key(CheckId id);
const std::vector<CheckId>& all_checks();

ValidatorOutcome run_check(CheckId id, const ClassificationReport& report,
                           const AffineSemigroup& s);

}  // namespace sgclass
