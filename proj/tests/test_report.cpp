#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgclass/checks.hpp"
#include "sgclass/families.hpp"
#include "sgclass/report.hpp"

using namespace sgclass;

namespace {

SemigroupDocument plane_doc() { return {"plane", 2, {{1, 0}, {0, 1}}, {1, 1}, std::nullopt}; }

}  // namespace

TEST_CASE("report for S(2,1)") {
  const auto r = classify(family_document(2, 1));
  REQUIRE(r.h_vector.has_value());
  CHECK(r.h_vector->entries == std::vector<Int>{1, 1, 2});
  CHECK(r.cm_type() == 3);
  CHECK(r.is_nearly_gorenstein == true);
  CHECK(r.is_almost_gorenstein == true);
  CHECK(r.is_level == false);
  CHECK(r.is_cohen_macaulay == true);
  CHECK(r.depth_at_least_two == true);
  CHECK(r.canonical_source == "computed");
  CHECK(r.canonical_hilbert_check == true);
  CHECK(r.hilbert_prefix == std::vector<Int>{1, 3, 7, 11, 15, 19, 23});
  CHECK(r.validators.at("socle_two_type").verdict == Verdict::kPass);
  CHECK(r.validators.at("type_two_level").verdict == Verdict::kVacuous);
  CHECK(r.unavailable.empty());
}

TEST_CASE("report for the plane") {
  const auto r = classify(plane_doc());
  CHECK(r.is_gorenstein == true);
  CHECK(r.is_level == true);
  CHECK(r.is_nearly_gorenstein == true);
  CHECK(r.is_almost_gorenstein == true);
  CHECK(r.is_cohen_macaulay == true);
  CHECK(r.standard_graded);
  for (const auto& [key, out] : r.validators) {
    CAPTURE(key);
    CHECK(out.verdict == Verdict::kVacuous);
  }
}

TEST_CASE("non-simplicial fixture marks canonical fields unavailable") {
  const auto r = classify(fixture("square_cone_ng").document);
  CHECK_FALSE(r.is_simplicial);
  CHECK_FALSE(r.canonical.has_value());
  const auto j = to_json(r);
  CHECK(j["canonical_generators"] == "unavailable");
  CHECK(j["is_nearly_gorenstein"] == "unavailable");
  CHECK(j["cm_type"] == "unavailable");
  // Every unavailable field carries a reason code.
  for (const auto& [key, value] : j.items()) {
    if (value.is_string() && value == "unavailable") {
      CAPTURE(key);
      CHECK(j["unavailable_reasons"].contains(key));
    }
  }
  CHECK(j["unavailable_reasons"]["staircase"] == "NOT_SIMPLICIAL");
}

TEST_CASE("external canonical generators are used as given") {
  auto doc = family_document(2, 1);
  doc.canonical_generators = std::vector<LatticeVector>{{3, -3}, {1, -1}, {2, 2}};
  const auto r = classify(doc);
  CHECK(r.canonical_source == "external");
  CHECK(r.canonical->generators == std::vector<LatticeVector>{{1, -1}, {2, 2}, {3, -3}});
  CHECK(r.is_nearly_gorenstein == true);
  CHECK(r.canonical_hilbert_check == true);
  CHECK(to_json(r)["canonical_source"] == "external");
}

TEST_CASE("three-dimensional report is flagged experimental") {
  const auto r = classify(fixture("ag_not_ng_dim3").document);
  CHECK(r.cohen_macaulay_experimental);
  CHECK(r.unavailable.at("depth_at_least_two") == "UNSUPPORTED_DIMENSION");
  CHECK(r.is_almost_gorenstein == true);
  CHECK(r.is_nearly_gorenstein == false);
}

TEST_CASE("invalid documents") {
  try {
    (void)classify({"bad", 2, {{1, 0}, {2, 0}}, {1, 1}, std::nullopt});
    FAIL("expected INCONSISTENT_GRADING");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInconsistentGrading);
  }
  try {
    (void)classify({"line", 2, {{1, 0}, {0, 1}, {1, -1}}, {1, 1, 0}, std::nullopt});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() != ErrorCode::kParseError);
  }
  CHECK_THROWS_AS(parse_document(nlohmann::json::parse(R"({"name": "x"})")), Error);
  CHECK_THROWS_AS(parse_document(nlohmann::json::parse(
                      R"({"name": "x", "ambient_dim": 2, "generators": [[1]], "degrees": [1]})")),
                  Error);
}

TEST_CASE("document round trip") {
  auto doc = family_document(3, 2);
  doc.canonical_generators = std::vector<LatticeVector>{{1, 2}};
  const auto back = parse_document(nlohmann::json::parse(to_json(doc).dump()));
  CHECK(back.name == doc.name);
  CHECK(back.generators == doc.generators);
  CHECK(back.degrees == doc.degrees);
  CHECK(back.canonical_generators == doc.canonical_generators);
}

TEST_CASE("json output is deterministic and complete") {
  for (const auto& f : fixture_catalog()) {
    CAPTURE(f.name);
    const auto a = to_json(classify(f.document)).dump(2);
    const auto b = to_json(classify(f.document)).dump(2);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    for (const char* key : {"name", "dim", "extremal_rays", "is_pointed", "is_simplicial",
                            "is_semi_standard", "hilbert_prefix", "h_vector", "socle_degree",
                            "a_invariant", "is_cohen_macaulay", "depth_at_least_two",
                            "canonical_generators", "canonical_degrees", "canonical_source",
                            "cm_type", "is_gorenstein", "is_level", "is_nearly_gorenstein",
                            "is_almost_gorenstein", "stanley_inequalities", "cokernel_numerator",
                            "validator_results", "provenance_notes"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["validator_results"].size() == 5);
  }
}

TEST_CASE("text output mentions the main verdicts") {
  const auto text = to_text(classify(family_document(2, 1)));
  CHECK(text.find("h-vector:          (1,1,2)") != std::string::npos);
  CHECK(text.find("nearly Gorenstein: yes") != std::string::npos);
}

TEST_CASE("check identifiers") {
  CHECK(parse_check_id("3.5") == CheckId::kTraceInitialDegree);
  CHECK(parse_check_id("6.3") == CheckId::kSocleTwoFamily);
  CHECK(parse_check_id("type_two_level") == CheckId::kTypeTwoLevel);
  try {
    (void)parse_check_id("9.9");
    FAIL("expected UNKNOWN_THEOREM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownTheorem);
  }
  CHECK(all_checks().size() == 8);
}

TEST_CASE("family checks pass on the grid") {
  for (Int n = 2; n <= 4; ++n) {
    for (Int k = 1; k <= n + 1; ++k) {
      const auto doc = family_document(n, k);
      const auto r = classify(doc);
      const auto s = to_semigroup(doc);
      CHECK(run_check(CheckId::kSocleTwoFamily, r, s).verdict == Verdict::kPass);
      CHECK(run_check(CheckId::kNonStandardAgNg, r, s).verdict == Verdict::kPass);
      CHECK(run_check(CheckId::kStandardAgNg, r, s).verdict == Verdict::kVacuous);
    }
  }
}

TEST_CASE("options are honoured") {
  ClassifyOptions o;
  o.max_degree = 200;
  o.multiple_bound = 4;
  const auto r = classify(family_document(2, 2), o);
  CHECK(r.h_vector->entries == std::vector<Int>{1, 1, 2});
}
