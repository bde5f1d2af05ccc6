#include "sgclass/canonical.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sgclass {

namespace {

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

bool below_all(const std::vector<RayPoint>& mins, const RayPoint& y) {
  return std::all_of(mins.begin(), mins.end(), [&](const RayPoint& mu) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (mu[j] <= y[j]) return false;
    }
    return true;
  });
}

}  // namespace

SearchBox default_search_box(const Staircase& t, const HVector& h) {
  const Int s = static_cast<Int>(h.socle_degree());
  const Int m = t.max_threshold();
  return SearchBox{std::vector<Int>(t.dim(), -(s + 2 + m)), std::vector<Int>(t.dim(), m + s + 2)};
}

bool canonical_support_contains(const Staircase& t, const LatticeVector& w) {
  if (!t.certified()) throw Error(ErrorCode::kNotCertified, "staircase is not certified");
  auto dec = t.decompose(-w);
  if (!dec) throw Error(ErrorCode::kNotInGroup, "vector outside the group");
  return below_all(t.min_elements()[dec->coset], dec->z);
}

CanonicalModule make_canonical_module(std::vector<LatticeVector> generators,
                                      const AffineSemigroup& s) {
  if (generators.empty()) throw Error(ErrorCode::kEmptyInput, "canonical module without generators");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  CanonicalModule m;
  for (const auto& g : generators) {
    auto deg = s.degree_of(g);
    if (!deg) throw Error(ErrorCode::kNotInGroup, "canonical generator outside the group");
    m.degrees.push_back(*deg);
  }
  m.generators = std::move(generators);
  m.a_invariant = -*std::min_element(m.degrees.begin(), m.degrees.end());
  return m;
}

CanonicalModule canonical_generators(const Staircase& t, const AffineSemigroup& s,
                                     const HVector& h, const std::optional<SearchBox>& box_opt) {
  if (!t.certified()) throw Error(ErrorCode::kNotCertified, "staircase is not certified");
  if (!is_cohen_macaulay(t)) throw Error(ErrorCode::kNotCohenMacaulay, "ring is not Cohen-Macaulay");
  const std::size_t d = t.dim();
  const SearchBox box = box_opt ? *box_opt : default_search_box(t, h);
  if (box.lower.size() != d || box.upper.size() != d) {
    throw Error(ErrorCode::kDimensionMismatch, "search box dimension");
  }
  const Int lo_deg = static_cast<Int>(d) - static_cast<Int>(h.socle_degree());
  const Int hi_deg = static_cast<Int>(d);

  std::vector<LatticeVector> gens;
  for (std::size_t p = 0; p < t.residues().size(); ++p) {
    const auto& mins = t.min_elements()[p];
    std::vector<Int> upper = box.upper;
    for (const auto& mu : mins) {
      for (std::size_t j = 0; j < d; ++j) upper[j] = std::min(upper[j], mu[j] - 1);
    }
    RayPoint y(d);
    std::function<void(std::size_t)> rec = [&](std::size_t axis) {
      if (axis == d) {
        // u = p + y.e lies in -W; its negative is a candidate.
        const Int deg_w = -t.degree(p, y);
        if (deg_w < lo_deg || deg_w > hi_deg) return;
        const LatticeVector w = -t.compose(p, y);
        for (const auto& g : s.generators()) {
          if (canonical_support_contains(t, w - g)) return;
        }
        gens.push_back(w);
        return;
      }
      for (Int c = box.lower[axis]; c <= upper[axis]; ++c) {
        y[axis] = c;
        rec(axis + 1);
      }
    };
    rec(0);
  }
  if (gens.empty()) throw Error(ErrorCode::kBoxTooSmall, "no canonical generator inside the box");
  CanonicalModule m = make_canonical_module(std::move(gens), s);
  if (!canonical_hilbert_check(m, s, h)) {
    throw Error(ErrorCode::kBoxTooSmall, "canonical module degree counts disagree with the h-vector");
  }
  return m;
}

bool canonical_hilbert_check(const CanonicalModule& m, const AffineSemigroup& s,
                             const HVector& h) {
  const Int d = static_cast<Int>(s.dim());
  const Int sd = static_cast<Int>(h.socle_degree());
  const Int start = d - sd;
  if (std::any_of(m.degrees.begin(), m.degrees.end(), [&](Int deg) { return deg < start; })) {
    return false;
  }
  for (Int i = start; i <= d + 2; ++i) {
    Int expected = 0;
    for (Int k = 0; k <= sd; ++k) {
      const Int rest = i - start - k;
      if (rest < 0) break;
      expected = checked_add(expected, checked_mul(h.entries[static_cast<std::size_t>(sd - k)],
                                                   binomial(rest + d - 1, d - 1)));
    }
    std::set<LatticeVector> component;
    for (std::size_t g = 0; g < m.generators.size(); ++g) {
      for (const auto& x : s.elements_of_degree(i - m.degrees[g])) component.insert(m.generators[g] + x);
    }
    if (static_cast<Int>(component.size()) != expected) return false;
  }
  return true;
}

bool is_gorenstein(const CanonicalModule& m) { return m.type() == 1; }

bool is_level(const CanonicalModule& m) {
  return std::adjacent_find(m.degrees.begin(), m.degrees.end(), std::not_equal_to<>()) ==
         m.degrees.end();
}

}  // namespace sgclass
