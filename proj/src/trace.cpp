#include "sgclass/trace.hpp"

#include <algorithm>
#include <set>

namespace sgclass {

bool anti_ideal_member(const AffineSemigroup& s, const std::vector<LatticeVector>& ideal,
                       const LatticeVector& u) {
  if (!s.in_group(u)) throw Error(ErrorCode::kNotInGroup, "anti-ideal query outside the group");
  return std::all_of(ideal.begin(), ideal.end(), [&](const LatticeVector& v) { return s.member(u + v); });
}

bool trace_contains(const AffineSemigroup& s, const std::vector<LatticeVector>& ideal,
                    const LatticeVector& a) {
  if (!s.member(a)) throw Error(ErrorCode::kNotInSemigroup, "trace query for a non-element");
  return std::any_of(ideal.begin(), ideal.end(), [&](const LatticeVector& v) {
    const LatticeVector u = a - v;
    return s.in_group(u) && anti_ideal_member(s, ideal, u);
  });
}

bool is_nearly_gorenstein(const AffineSemigroup& s, const std::vector<LatticeVector>& canonical) {
  return std::all_of(s.generators().begin(), s.generators().end(),
                     [&](const LatticeVector& a) { return trace_contains(s, canonical, a); });
}

Int ideal_degree_dimension(const AffineSemigroup& s, const std::vector<LatticeVector>& ideal,
                           Int b) {
  std::set<LatticeVector> component;
  for (const auto& v : ideal) {
    auto dv = s.degree_of(v);
    if (!dv) throw Error(ErrorCode::kNotInGroup, "ideal generator outside the group");
    for (const auto& x : s.elements_of_degree(b - *dv)) component.insert(v + x);
  }
  return static_cast<Int>(component.size());
}

std::vector<LatticeVector> minimize_ideal(const AffineSemigroup& s,
                                          std::vector<LatticeVector> ideal) {
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  std::vector<LatticeVector> out;
  for (const auto& v : ideal) {
    const bool redundant = std::any_of(ideal.begin(), ideal.end(), [&](const LatticeVector& w) {
      return w != v && s.member(v - w);
    });
    if (!redundant) out.push_back(v);
  }
  return out;
}

Verdict validate_trace_initial_degree(const AffineSemigroup& s,
                                      const std::vector<LatticeVector>& ideal,
                                      bool depth_at_least_two) {
  if (ideal.size() < 2) throw Error(ErrorCode::kPrincipalIdeal, "ideal is principal");
  if (!depth_at_least_two) return Verdict::kVacuous;
  for (const auto& e : s.extremal_generators()) {
    if (!trace_contains(s, ideal, e)) return Verdict::kVacuous;
  }
  Int b = *s.degree_of(ideal.front());
  for (const auto& v : ideal) b = std::min(b, *s.degree_of(v));
  return ideal_degree_dimension(s, ideal, b) >= 2 ? Verdict::kPass : Verdict::kFail;
}

}  // namespace sgclass
