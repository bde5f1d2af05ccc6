#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brute_force.hpp"
#include "sgclass/canonical.hpp"
#include "sgclass/families.hpp"

using namespace sgclass;

namespace {

AffineSemigroup make(const SemigroupDocument& d) { return AffineSemigroup::build(d.generators, d.degrees); }
AffineSemigroup plane() { return AffineSemigroup::build({{1, 0}, {0, 1}}, {1, 1}); }

struct Computed {
  AffineSemigroup s;
  Staircase t;
  HVector h;
  CanonicalModule m;
};

Computed compute(const SemigroupDocument& d) {
  auto s = make(d);
  auto t = build_certified_staircase(s, 32);
  auto h = h_vector(s);
  auto m = canonical_generators(t, s, h);
  return {std::move(s), std::move(t), std::move(h), std::move(m)};
}

std::vector<bf::Vec> brute_force_canonical(const Computed& c, long long radius, long long m) {
  std::vector<bf::Vec> gens, rays;
  for (const auto& g : c.s.generators()) gens.emplace_back(g.coords());
  for (const auto& r : c.t.rays()) rays.emplace_back(r.coords());
  bf::Semigroup ref(gens);
  return bf::canonical(ref, rays, radius, m).generators;
}

std::vector<bf::Vec> as_bf(const std::vector<LatticeVector>& v) {
  std::vector<bf::Vec> out;
  for (const auto& x : v) out.emplace_back(x.coords());
  return out;
}

}  // namespace

TEST_CASE("canonical module of the plane") {
  const auto c = compute(SemigroupDocument{"plane", 2, {{1, 0}, {0, 1}}, {1, 1}, std::nullopt});
  CHECK(c.m.generators == std::vector<LatticeVector>{{1, 1}});
  CHECK(c.m.degrees == std::vector<Int>{2});
  CHECK(c.m.a_invariant == -2);
  CHECK(c.m.type() == 1);
  CHECK(is_gorenstein(c.m));
  CHECK(is_level(c.m));
  CHECK(canonical_hilbert_check(c.m, c.s, c.h));
}

TEST_CASE("canonical module of S(2,1)") {
  const auto c = compute(family_document(2, 1));
  CHECK(c.m.type() == 3);
  auto degs = c.m.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<Int>{0, 0, 1});
  CHECK(c.m.generators == std::vector<LatticeVector>{{1, -1}, {2, 2}, {3, -3}});
  CHECK(c.m.a_invariant == 0);
  CHECK_FALSE(is_gorenstein(c.m));
  CHECK_FALSE(is_level(c.m));
  CHECK(canonical_hilbert_check(c.m, c.s, c.h));
  CHECK(canonical_support_contains(c.t, {1, -1}));
  CHECK_FALSE(canonical_support_contains(c.t, {0, 0}));
}

TEST_CASE("truncated generator set fails the Hilbert check") {
  const auto c = compute(family_document(2, 1));
  for (std::size_t drop = 0; drop < c.m.generators.size(); ++drop) {
    auto gens = c.m.generators;
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(drop));
    CHECK_FALSE(canonical_hilbert_check(make_canonical_module(gens, c.s), c.s, c.h));
  }
}

TEST_CASE("Gorenstein and level verdicts on fixtures") {
  CHECK_FALSE(is_gorenstein(compute(fixture("ag_not_ng_top_h_one").document).m));
  CHECK(is_level(compute(fixture("level_not_ag").document).m));
  CHECK(is_gorenstein(compute(SemigroupDocument{"plane", 2, {{1, 0}, {0, 1}}, {1, 1}, std::nullopt}).m));
}

TEST_CASE("canonical generators agree with brute force in dimension two") {
  for (const auto& f : fixture_catalog()) {
    const auto s = make(f.document);
    if (s.dim() != 2) continue;
    CAPTURE(f.name);
    const auto c = compute(f.document);
    CHECK(as_bf(c.m.generators) == brute_force_canonical(c, 16, 40));
    CHECK(canonical_hilbert_check(c.m, c.s, c.h));
  }
  for (Int n = 2; n <= 3; ++n) {
    for (Int k = 1; k <= n + 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto c = compute(family_document(n, k));
      CHECK(as_bf(c.m.generators) == brute_force_canonical(c, 16, 40));
    }
  }
}

TEST_CASE("canonical generators agree with brute force in dimension three") {
  const auto c = compute(fixture("ag_not_ng_dim3").document);
  CHECK(as_bf(c.m.generators) == brute_force_canonical(c, 7, 12));
  CHECK(c.m.type() == 3);
  CHECK(canonical_hilbert_check(c.m, c.s, c.h));
}

TEST_CASE("degree window and a-invariant") {
  for (const auto& f : fixture_catalog()) {
    const auto s = make(f.document);
    if (s.extremal_generators().size() != s.dim()) continue;
    CAPTURE(f.name);
    const auto c = compute(f.document);
    const Int d = static_cast<Int>(s.dim());
    const Int sd = static_cast<Int>(c.h.socle_degree());
    CHECK(c.m.a_invariant == sd - d);
    for (Int deg : c.m.degrees) {
      CHECK(deg >= d - sd);
      CHECK(deg <= d);
    }
  }
}

TEST_CASE("non-Cohen-Macaulay input is rejected") {
  const auto s = AffineSemigroup::build({{4, 0}, {3, 1}, {1, 3}, {0, 4}}, {1, 1, 1, 1});
  const auto t = build_certified_staircase(s, 16);
  try {
    (void)canonical_generators(t, s, HVector{{1, 2, 1}, 2});
    FAIL("expected NOT_CM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotCohenMacaulay);
  }
}

TEST_CASE("a search box that is too small is reported") {
  const auto c = compute(family_document(3, 2));
  SearchBox tiny{{0, 0}, {0, 0}};
  try {
    (void)canonical_generators(c.t, c.s, c.h, tiny);
    FAIL("expected BOX_TOO_SMALL");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBoxTooSmall);
  }
}
