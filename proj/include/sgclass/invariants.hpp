#pragma once

#include <cstddef>
#include <vector>

#include "sgclass/semigroup.hpp"

namespace sgclass {

/// Numerator coefficients of the Hilbert series over (1 - t)^dim.
struct HVector {
  std::vector<Int> entries;
  std::size_t dim = 0;

  std::size_t socle_degree() const { return entries.empty() ? 0 : entries.size() - 1; }
  Int top() const { return entries.back(); }
  bool symmetric() const;
};

/// Thrown by h_vector when the numerator has negative entries or does not
/// settle within the degree budget. Carries what was computed.
class NumeratorError : public Error {
 public:
  NumeratorError(const std::string& message, std::vector<Int> partial)
      : Error(ErrorCode::kNonpolynomialNumerator, message), partial_(std::move(partial)) {}
  const std::vector<Int>& partial() const noexcept { return partial_; }

 private:
  std::vector<Int> partial_;
};

/// Dimensions of the degree components 0..i_max.
std::vector<Int> hilbert_function(const AffineSemigroup& s, Int i_max);

/// Coefficients of (1 - t)^dim * H(t), truncated at the series order.
std::vector<Int> series_numerator(const std::vector<Int>& hilbert, std::size_t dim);

/// The h-vector. The numerator is accepted once dim + 5 zero coefficients
/// follow its last nonzero term; the Hilbert function is extended up to
/// max_degree to reach that margin.
HVector h_vector(const AffineSemigroup& s, Int max_degree = 64);

/// h_s + ... + h_{s-j} >= h_0 + ... + h_j for j = 0..floor(s/2).
std::vector<bool> stanley_inequalities(const HVector& h);

struct CokernelData {
  std::vector<Int> numerator;  // c_0 .. c_{s-1}
  Int multiplicity = 0;        // e(C) = sum of c_j
  Int expected_mu = 0;         // r - 1
};

CokernelData cokernel_data(const HVector& h, Int type);

/// Almost Gorenstein test for Cohen-Macaulay domains: e(C) = r - 1.
bool is_almost_gorenstein(const HVector& h, Int type);

enum class Verdict { kPass, kFail, kVacuous };

const char* to_string(Verdict v);

struct LevelSocleResult {
  Verdict verdict = Verdict::kVacuous;
  bool almost_gorenstein = false;
  bool level = false;
  bool socle_degree_one = false;
  bool gorenstein = false;
};

/// For non-Gorenstein Cohen-Macaulay domains: (almost Gorenstein and level)
/// holds exactly when the socle degree is 1. Gorenstein input is vacuous.
LevelSocleResult level_socle_classifier(const HVector& h, Int type, bool level, bool gorenstein);

/// Socle degree 2, non-level: the type equals h_1 + h_2. Throws
/// NOT_APPLICABLE outside that regime.
bool socle_two_type_check(const HVector& h, Int type, bool level);

}  // namespace sgclass
