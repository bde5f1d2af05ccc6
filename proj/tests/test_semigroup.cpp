#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "brute_force.hpp"
#include "sgclass/families.hpp"
#include "sgclass/semigroup.hpp"

using namespace sgclass;

namespace {

AffineSemigroup s21() {
  const auto d = family_document(2, 1);
  return AffineSemigroup::build(d.generators, d.degrees);
}

AffineSemigroup plane() { return AffineSemigroup::build({{1, 0}, {0, 1}}, {1, 1}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kParseError;
}

std::vector<LatticeVector> vs(std::initializer_list<LatticeVector> l) { return l; }

}  // namespace

TEST_CASE("grading of S(2,1) is (x+y)/4") {
  const auto s = s21();
  CHECK(s.grading().numerator == LatticeVector{1, 1});
  CHECK(s.grading().denominator == 4);
  CHECK(s.dim() == 2);
  CHECK(s.generators().size() == 5);
}

TEST_CASE("grading of the plane is x+y") {
  const auto s = plane();
  CHECK(s.grading().numerator == LatticeVector{1, 1});
  CHECK(s.grading().denominator == 1);
}

TEST_CASE("invalid inputs") {
  CHECK(code_of([] { AffineSemigroup::build({{1, 0}, {2, 0}}, {1, 1}); }) ==
        ErrorCode::kInconsistentGrading);
  CHECK(code_of([] { AffineSemigroup::build({}, {}); }) == ErrorCode::kEmptyInput);
  CHECK(code_of([] { AffineSemigroup::build({{1, 0}, {0, 1, 1}}, {1, 1}); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(code_of([] { AffineSemigroup::build({{1, 0}}, {1, 1}); }) == ErrorCode::kDimensionMismatch);
  CHECK(code_of([] { AffineSemigroup::build({{1, 0}, {0, 1}}, {1, 0}); }) ==
        ErrorCode::kInconsistentGrading);
}

TEST_CASE("redundant generators are dropped") {
  const auto s = AffineSemigroup::build({{1, 0}, {0, 1}, {1, 1}, {1, 0}}, {1, 1, 2, 1});
  CHECK(s.generators() == vs({{0, 1}, {1, 0}}));
}

TEST_CASE("membership in S(2,1)") {
  const auto s = s21();
  CHECK(s.member({3, 5}));
  CHECK(s.member({2, 6}));
  CHECK_FALSE(s.member({1, 3}));
  CHECK(s.member({0, 0}));
  CHECK_FALSE(s.member({-1, 5}));
}

TEST_CASE("membership agrees with the brute-force search") {
  const auto s = s21();
  bf::Semigroup ref({{0, 4}, {2, 2}, {4, 0}, {1, 7}, {3, 5}});
  for (Int x = 0; x <= 14; ++x) {
    for (Int y = 0; y <= 14; ++y) {
      CHECK(s.member({x, y}) == ref.member({x, y}));
    }
  }
}

TEST_CASE("degree layers") {
  const auto s = s21();
  CHECK(s.elements_of_degree(0) == vs({{0, 0}}));
  CHECK(s.elements_of_degree(1) == vs({{0, 4}, {2, 2}, {4, 0}}));
  CHECK(elements_of_degree(plane(), 2) == vs({{0, 2}, {1, 1}, {2, 0}}));
  const auto h = bf::hilbert({{0, 4}, {2, 2}, {4, 0}, {1, 7}, {3, 5}}, {1, 1, 1, 2, 2}, 6);
  for (Int i = 0; i <= 6; ++i) {
    CHECK(static_cast<long long>(s.elements_of_degree(i).size()) == h[i]);
  }
}

TEST_CASE("minimal-degree and extremal generators") {
  CHECK(s21().min_degree_generators() == vs({{0, 4}, {2, 2}, {4, 0}}));
  CHECK(plane().min_degree_generators() == vs({{0, 1}, {1, 0}}));
  CHECK(AffineSemigroup::build({{0, 1}, {1, 2}}, {1, 2}).min_degree_generators() == vs({{0, 1}}));
  CHECK(s21().extremal_generators() == vs({{0, 4}, {4, 0}}));
  CHECK(plane().extremal_generators() == vs({{0, 1}, {1, 0}}));
  const auto& r1 = fixture("ng_type_two_even_steps").document;
  CHECK(AffineSemigroup::build(r1.generators, r1.degrees).extremal_generators() ==
        vs({{0, 1}, {8, 1}}));
}

TEST_CASE("semi-standard test") {
  CHECK(s21().is_semi_standard() == SemiStandard::kYes);
  CHECK(plane().is_semi_standard() == SemiStandard::kYes);
  CHECK(AffineSemigroup::build({{0, 1}, {1, 2}}, {1, 2}).is_semi_standard() == SemiStandard::kNo);
  // (1,7) * 2 = (2,2) + 3 (0,4)
  CHECK(s21().member(LatticeVector{2, 14} - LatticeVector{2, 2}));
}

TEST_CASE("extremal degree check") {
  CHECK(s21().extremal_degree_check());
  CHECK(plane().extremal_degree_check());
  CHECK_FALSE(AffineSemigroup::build({{1, 0}, {1, 1}, {1, 2}}, {1, 2, 3}).extremal_degree_check());
}

TEST_CASE("degree of group elements") {
  const auto s = s21();
  CHECK(s.degree_of({1, -1}) == 0);
  CHECK(s.degree_of({2, 2}) == 1);
  CHECK_FALSE(s.degree_of({1, 0}).has_value());
}

TEST_CASE("concurrent membership queries share the cache safely") {
  const auto s = s21();
  bf::Semigroup ref({{0, 4}, {2, 2}, {4, 0}, {1, 7}, {3, 5}});
  std::vector<char> expected;
  for (Int x = 0; x < 20; ++x) {
    for (Int y = 0; y < 20; ++y) expected.push_back(ref.member({x, y}));
  }
  std::vector<std::thread> threads;
  std::vector<int> bad(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (Int x = 0; x < 20; ++x) {
        for (Int y = 0; y < 20; ++y) {
          if (s.member({x, y}) != static_cast<bool>(expected[x * 20 + y])) ++bad[t];
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int b : bad) CHECK(b == 0);
}
