#include "sgclass/checks.hpp"

#include <array>
#include <utility>

#include "sgclass/trace.hpp"

namespace sgclass {

namespace {

struct CheckName {
  CheckId id;
  std::string_view number;
  std::string_view key;
};

constexpr std::array<CheckName, 8> kNames{{
    {CheckId::kTraceInitialDegree, "3.5", "trace_initial_degree"},
    {CheckId::kNearlyGorensteinTopH, "3.6", "nearly_gorenstein_top_h"},
    {CheckId::kTypeTwoLevel, "3.7", "type_two_level"},
    {CheckId::kLevelSocleOne, "5.1", "level_socle_one"},
    {CheckId::kSocleTwoType, "5.3", "socle_two_type"},
    {CheckId::kStandardAgNg, "6.1", "standard_ag_ng_gorenstein"},
    {CheckId::kNonStandardAgNg, "6.2", "nonstandard_ag_implies_ng"},
    {CheckId::kSocleTwoFamily, "6.3", "socle_two_family"},
}};

ValidatorOutcome vacuous(std::string why) { return {Verdict::kVacuous, std::move(why)}; }

ValidatorOutcome verdict(bool ok, std::string detail) {
  return {ok ? Verdict::kPass : Verdict::kFail, std::move(detail)};
}

bool cm_semi_standard(const ClassificationReport& r) {
  return r.is_semi_standard == SemiStandard::kYes && r.is_cohen_macaulay.value_or(false);
}

std::string h_string(const HVector& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.entries.size(); ++i) {
    out += (i ? "," : "") + std::to_string(h.entries[i]);
  }
  return out + ")";
}

}  // namespace

CheckId parse_check_id(std::string_view id) {
  for (const auto& n : kNames) {
    if (id == n.number || id == n.key) return n.id;
  }
  throw Error(ErrorCode::kUnknownTheorem, "unknown check '" + std::string(id) + "'");
}

std::string_view check_key(CheckId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.key;
  }
  return "?";
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& n : kNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

ValidatorOutcome run_check(CheckId id, const ClassificationReport& r, const AffineSemigroup& s) {
  switch (id) {
    case CheckId::kTraceInitialDegree: {
      if (r.is_semi_standard != SemiStandard::kYes) return vacuous("not known to be semi-standard");
      if (!r.canonical) return vacuous("canonical module unavailable");
      if (r.canonical->generators.size() < 2) return vacuous("canonical ideal is principal");
      std::optional<bool> depth = r.depth_at_least_two;
      if (!depth && r.dim >= 2 && r.is_cohen_macaulay.value_or(false)) depth = true;
      if (!depth) return vacuous("depth unknown");
      const Verdict v = validate_trace_initial_degree(s, r.canonical->generators, *depth);
      if (v == Verdict::kVacuous) return vacuous("hypothesis not met");
      return verdict(v == Verdict::kPass, "initial degree component of the canonical ideal");
    }
    case CheckId::kNearlyGorensteinTopH: {
      if (!cm_semi_standard(r) || !r.canonical || !r.h_vector) return vacuous("needs CM semi-standard data");
      if (*r.is_gorenstein) return vacuous("Gorenstein");
      if (!r.extremal_in_trace.value_or(false)) return vacuous("extremal monomials not in the trace");
      return verdict(r.h_vector->top() >= 2, "h_s = " + std::to_string(r.h_vector->top()));
    }
    case CheckId::kTypeTwoLevel: {
      if (!cm_semi_standard(r) || !r.canonical || !r.is_nearly_gorenstein) return vacuous("needs CM data");
      if (!*r.is_nearly_gorenstein || r.canonical->type() != 2) return vacuous("not nearly Gorenstein of type 2");
      return verdict(*r.is_level, "type 2, nearly Gorenstein");
    }
    case CheckId::kLevelSocleOne: {
      if (!cm_semi_standard(r) || !r.canonical || !r.h_vector) return vacuous("needs CM semi-standard data");
      if (r.dim == 0) return vacuous("dimension 0");
      const auto res = level_socle_classifier(*r.h_vector, r.canonical->type(), *r.is_level,
                                              *r.is_gorenstein);
      if (res.verdict == Verdict::kVacuous) return vacuous("Gorenstein");
      return {res.verdict, std::string("AG=") + (res.almost_gorenstein ? "1" : "0") +
                               " level=" + (res.level ? "1" : "0") +
                               " s=1:" + (res.socle_degree_one ? "1" : "0")};
    }
    case CheckId::kSocleTwoType: {
      if (!r.is_cohen_macaulay.value_or(false) || !r.canonical || !r.h_vector) return vacuous("needs CM data");
      if (r.h_vector->socle_degree() != 2 || *r.is_level) return vacuous("needs s = 2 and non-level");
      return verdict(socle_two_type_check(*r.h_vector, r.canonical->type(), *r.is_level),
                     "type " + std::to_string(r.canonical->type()) + ", h = " + h_string(*r.h_vector));
    }
    case CheckId::kStandardAgNg: {
      if (!r.standard_graded || !r.is_cohen_macaulay.value_or(false)) return vacuous("needs standard graded CM");
      if (!r.h_vector || r.h_vector->socle_degree() < 2) return vacuous("socle degree < 2");
      if (!r.is_almost_gorenstein || !r.is_nearly_gorenstein) return vacuous("AG/NG unavailable");
      if (!(*r.is_almost_gorenstein && *r.is_nearly_gorenstein)) return vacuous("not both AG and NG");
      return verdict(*r.is_gorenstein, "AG and NG");
    }
    case CheckId::kNonStandardAgNg: {
      if (r.standard_graded || !cm_semi_standard(r)) return vacuous("needs non-standard semi-standard CM");
      if (r.dim != 2 || !r.h_vector || r.h_vector->socle_degree() != 2) return vacuous("needs dim = s = 2");
      if (!r.is_almost_gorenstein || !r.is_nearly_gorenstein) return vacuous("AG/NG unavailable");
      if (!*r.is_almost_gorenstein) return vacuous("not almost Gorenstein");
      return verdict(*r.is_nearly_gorenstein, "almost Gorenstein");
    }
    case CheckId::kSocleTwoFamily: {
      if (!cm_semi_standard(r) || r.dim != 2) return vacuous("needs CM semi-standard of dim 2");
      if (!r.h_vector || r.h_vector->socle_degree() != 2) return vacuous("needs s = 2");
      if (!r.is_almost_gorenstein || !r.is_nearly_gorenstein || !r.is_level) return vacuous("AG/NG unavailable");
      if (*r.is_level || !*r.is_almost_gorenstein) return vacuous("not non-level AG");
      const auto& h = r.h_vector->entries;
      const bool shape = h[2] >= 2 && h[1] == h[2] - 1;
      // Invariants only: semigroup isomorphism to the family is not tested.
      return verdict(*r.is_nearly_gorenstein && shape,
                     "NG=" + std::string(*r.is_nearly_gorenstein ? "1" : "0") + " h = " +
                         h_string(*r.h_vector) + " (isomorphism type not checked)");
    }
  }
  return vacuous("unknown");
}

}  // namespace sgclass
