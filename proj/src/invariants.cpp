#include "sgclass/invariants.hpp"

#include <algorithm>

namespace sgclass {

namespace {

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

}  // namespace

bool HVector::symmetric() const {
  const std::size_t s = socle_degree();
  for (std::size_t i = 0; i <= s; ++i) {
    if (entries[i] != entries[s - i]) return false;
  }
  return true;
}

std::vector<Int> hilbert_function(const AffineSemigroup& s, Int i_max) {
  std::vector<Int> out;
  for (Int i = 0; i <= i_max; ++i) out.push_back(static_cast<Int>(s.elements_of_degree(i).size()));
  return out;
}

std::vector<Int> series_numerator(const std::vector<Int>& hilbert, std::size_t dim) {
  const Int d = static_cast<Int>(dim);
  std::vector<Int> q(hilbert.size(), 0);
  for (std::size_t k = 0; k < hilbert.size(); ++k) {
    Int acc = 0;
    for (Int j = 0; j <= d && j <= static_cast<Int>(k); ++j) {
      Int term = checked_mul(binomial(d, j), hilbert[k - static_cast<std::size_t>(j)]);
      acc = (j % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
    }
    q[k] = acc;
  }
  return q;
}

HVector h_vector(const AffineSemigroup& s, Int max_degree) {
  const std::size_t d = s.dim();
  const Int margin = static_cast<Int>(d) + 5;
  Int horizon = std::min(max_degree, 2 * (s.max_generator_degree() + static_cast<Int>(d)) + margin);
  while (true) {
    auto q = series_numerator(hilbert_function(s, horizon), d);
    if (std::any_of(q.begin(), q.end(), [](Int c) { return c < 0; })) {
      throw NumeratorError("negative numerator coefficient", q);
    }
    Int last = -1;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] != 0) last = static_cast<Int>(k);
    }
    if (last >= 0 && horizon - last >= margin) {
      q.resize(static_cast<std::size_t>(last) + 1);
      return HVector{std::move(q), d};
    }
    if (horizon >= max_degree) {
      throw NumeratorError("numerator did not settle below degree " + std::to_string(max_degree), q);
    }
    horizon = std::min(max_degree, 2 * horizon);
  }
}

std::vector<bool> stanley_inequalities(const HVector& h) {
  const std::size_t s = h.socle_degree();
  std::vector<bool> out;
  Int top = 0, bottom = 0;
  for (std::size_t j = 0; j <= s / 2; ++j) {
    top += h.entries[s - j];
    bottom += h.entries[j];
    out.push_back(top >= bottom);
  }
  return out;
}

CokernelData cokernel_data(const HVector& h, Int type) {
  CokernelData out;
  out.expected_mu = type - 1;
  const std::size_t s = h.socle_degree();
  Int top = 0, bottom = 0;
  for (std::size_t j = 0; j < s; ++j) {
    top += h.entries[s - j];
    bottom += h.entries[j];
    out.numerator.push_back(top - bottom);
    out.multiplicity += top - bottom;
  }
  return out;
}

bool is_almost_gorenstein(const HVector& h, Int type) {
  const auto c = cokernel_data(h, type);
  return c.multiplicity == c.expected_mu;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kVacuous: return "VACUOUS";
  }
  return "?";
}

LevelSocleResult level_socle_classifier(const HVector& h, Int type, bool level, bool gorenstein) {
  LevelSocleResult out;
  out.almost_gorenstein = is_almost_gorenstein(h, type);
  out.level = level;
  out.socle_degree_one = h.socle_degree() == 1;
  out.gorenstein = gorenstein;
  if (gorenstein) return out;
  const bool lhs = out.almost_gorenstein && level;
  out.verdict = lhs == out.socle_degree_one ? Verdict::kPass : Verdict::kFail;
  return out;
}

bool socle_two_type_check(const HVector& h, Int type, bool level) {
  if (h.socle_degree() != 2 || level) {
    throw Error(ErrorCode::kNotApplicable, "needs socle degree 2 and a non-level ring");
  }
  return type == h.entries[1] + h.entries[2];
}

}  // namespace sgclass
