#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgclass/families.hpp"
#include "sgclass/staircase.hpp"

using namespace sgclass;

TEST_CASE("family generators") {
  const auto d = family_document(2, 1);
  CHECK(d.generators == std::vector<LatticeVector>{{0, 4}, {2, 2}, {4, 0}, {1, 7}, {3, 5}});
  CHECK(d.degrees == std::vector<Int>{1, 1, 1, 2, 2});
  const auto d23 = family_document(2, 3);
  CHECK(std::vector<LatticeVector>(d23.generators.begin() + 3, d23.generators.end()) ==
        std::vector<LatticeVector>{{5, 3}, {7, 1}});
  CHECK(family_document(3, 4).generators.size() == 7);
}

TEST_CASE("family parameter bounds") {
  for (auto [n, k] : std::vector<std::pair<Int, Int>>{{1, 1}, {2, 0}, {2, 4}, {0, 1}}) {
    try {
      (void)family_document(n, k);
      FAIL("expected BAD_PARAMS");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBadParams);
    }
  }
}

TEST_CASE("family documents build valid semigroups") {
  for (Int n = 2; n <= 4; ++n) {
    for (Int k = 1; k <= n + 1; ++k) {
      const auto d = family_document(n, k);
      const auto s = AffineSemigroup::build(d.generators, d.degrees);
      CHECK(s.generators().size() == d.generators.size());
      CHECK(s.dim() == 2);
    }
  }
}

TEST_CASE("fixture catalog") {
  const auto& cat = fixture_catalog();
  CHECK(cat.size() == 8);
  for (const auto& f : cat) {
    CAPTURE(f.name);
    CHECK(f.name == f.document.name);
    CHECK_FALSE(f.expected.empty());
    CHECK_NOTHROW(AffineSemigroup::build(f.document.generators, f.document.degrees));
  }
  const auto& r = fixture("level_not_ag");
  CHECK(r.document.degrees == std::vector<Int>{1, 1, 1, 1, 2});
  CHECK_THROWS_AS(fixture("missing"), Error);
}

TEST_CASE("fixture expectations obey level => type = top h") {
  for (const auto& f : fixture_catalog()) {
    std::optional<bool> level;
    std::optional<Int> type;
    std::optional<std::vector<Int>> h;
    for (const auto& e : f.expected) {
      if (e.field == "is_level") level = e.value.get<bool>();
      if (e.field == "cm_type") type = e.value.get<Int>();
      if (e.field == "h_vector") h = e.value.get<std::vector<Int>>();
    }
    if (level && *level && type && h) CHECK(*type == h->back());
  }
}

TEST_CASE("corpus is deterministic, certified and Cohen-Macaulay") {
  const auto a = corpus_generate(1);
  const auto b = corpus_generate(1);
  REQUIRE(a.size() == 100);
  REQUIRE(b.size() == a.size());
  std::size_t non_gorenstein_candidates = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].generators == b[i].generators);
    CHECK(a[i].degrees == b[i].degrees);
    const auto s = AffineSemigroup::build(a[i].generators, a[i].degrees);
    CHECK(s.dim() == 2);
    CHECK(s.generators().size() <= 7);
    for (const auto& g : s.generators()) CHECK(g[0] <= 12);
    auto t = build_certified_staircase(s, 64);
    CHECK(t.certified());
    CHECK(is_cohen_macaulay(t));
    const auto counts = artinian_counts(t);
    if (counts.back() >= 2) ++non_gorenstein_candidates;
  }
  // A Gorenstein ring has a one-dimensional top Artinian component.
  CHECK(non_gorenstein_candidates >= 1);
  CHECK(corpus_generate(2).front().generators != a.front().generators);
}
