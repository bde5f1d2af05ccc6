#pragma once

// Canonical module of a Cohen-Macaulay simplicial semigroup ring, kept as a
// subset W of the group Z S (degree-0 generators are allowed):
//
//   W = -{ u : u + F avoids S for every facet F spanned by all rays but one }.
//
// In dimension two this is -(C_1 n C_2) with C_i the ray-translate sets.

#include <cstddef>
#include <optional>
#include <vector>

#include "sgclass/invariants.hpp"
#include "sgclass/staircase.hpp"

namespace sgclass {

struct CanonicalModule {
  std::vector<LatticeVector> generators;  // lexicographic
  std::vector<Int> degrees;               // aligned with generators
  Int a_invariant = 0;

  Int type() const { return static_cast<Int>(generators.size()); }
  Int min_degree() const { return -a_invariant; }
};

/// Per-axis bounds on the ray coordinates of -w for candidate generators w.
struct SearchBox {
  std::vector<Int> lower;
  std::vector<Int> upper;
};

SearchBox default_search_box(const Staircase& t, const HVector& h);

/// Membership of w in W.
bool canonical_support_contains(const Staircase& t, const LatticeVector& w);

/// Minimal generators of W inside the box and the degree window
/// [dim - s, dim]; the result must pass canonical_hilbert_check or
/// BOX_TOO_SMALL is thrown. NOT_CM if the staircase is not Cohen-Macaulay.
CanonicalModule canonical_generators(const Staircase& t, const AffineSemigroup& s,
                                     const HVector& h,
                                     const std::optional<SearchBox>& box = std::nullopt);

/// Compares the degree counts of the module generated by m.generators with
/// t^{d-s}(h_s + ... + h_0 t^s)/(1-t)^d through degree d + 2.
bool canonical_hilbert_check(const CanonicalModule& m, const AffineSemigroup& s,
                             const HVector& h);

/// Builds the module record (sorted, with degrees and a-invariant) from an
/// explicit generator list.
CanonicalModule make_canonical_module(std::vector<LatticeVector> generators,
                                      const AffineSemigroup& s);

bool is_gorenstein(const CanonicalModule& m);
bool is_level(const CanonicalModule& m);

}  // namespace sgclass
