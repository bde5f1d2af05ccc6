#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgclass/lattice.hpp"

namespace sgclass {

/// Additive degree functional: lambda(v) = (numerator . v) / denominator.
/// Integral on the group of the semigroup, positive on every generator.
struct Grading {
  std::vector<Int> degree_per_generator;
  LatticeVector numerator;
  Int denominator = 1;

  /// Degree of a vector of the group lattice.
  Int degree(const LatticeVector& v) const;
  /// Exact value on an arbitrary integer vector of the ambient space.
  Rational value(const LatticeVector& v) const;
};

enum class SemiStandard { kYes, kNo, kUnknownWithinBound };

const char* to_string(SemiStandard s);

namespace detail {
struct SemigroupCache;
}

/// A pointed, positively graded affine semigroup with its minimal
/// generating set. Immutable; membership and degree layers are memoized in a
/// mutex-guarded cache shared between copies.
class AffineSemigroup {
 public:
  static AffineSemigroup build(std::vector<LatticeVector> raw_generators,
                               std::vector<Int> degrees);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Rank of the group lattice.
  std::size_t dim() const noexcept { return group_.rank(); }

  /// Minimal generators sorted by (degree, lexicographic).
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  const std::vector<Int>& degrees() const noexcept { return grading_.degree_per_generator; }
  const Grading& grading() const noexcept { return grading_; }
  const GroupLattice& group() const noexcept { return group_; }
  const Cone& cone() const noexcept { return *cone_; }
  Int max_generator_degree() const;

  bool in_group(const LatticeVector& v) const { return group_contains(group_, v); }
  /// Degree of v, or nullopt if v is outside the group.
  std::optional<Int> degree_of(const LatticeVector& v) const;

  bool member(const LatticeVector& v) const;
  /// Elements of the given degree, lexicographically sorted.
  std::vector<LatticeVector> elements_of_degree(Int degree) const;

  std::vector<LatticeVector> min_degree_generators() const;
  /// Generators spanning a one-dimensional face on their own.
  std::vector<LatticeVector> extremal_generators() const;

  SemiStandard is_semi_standard(Int multiple_bound = 64) const;
  bool extremal_degree_check() const;

 private:
  AffineSemigroup() = default;

  std::size_t ambient_dim_ = 0;
  std::vector<LatticeVector> generators_;
  Grading grading_;
  GroupLattice group_;
  std::shared_ptr<const Cone> cone_;
  std::shared_ptr<detail::SemigroupCache> cache_;
};

/// Free-standing forms of the semigroup queries.
inline bool member(const AffineSemigroup& s, const LatticeVector& v) { return s.member(v); }
inline std::vector<LatticeVector> elements_of_degree(const AffineSemigroup& s, Int i) {
  return s.elements_of_degree(i);
}

}  // namespace sgclass
