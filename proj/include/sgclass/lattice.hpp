#pragma once

// Exact lattice and cone geometry over Z^d.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "sgclass/arith.hpp"

namespace sgclass {

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim, 0) {}
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  /// gcd of the coordinates (0 for the zero vector).
  Int content() const;
  LatticeVector primitive() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector operator-() const;
  LatticeVector scaled(Int k) const;

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }

  // Lexicographic.
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

Int dot(const LatticeVector& a, const LatticeVector& b);

/// The group generated by a finite set of vectors, in row Hermite normal form.
struct GroupLattice {
  std::size_t ambient_dim = 0;
  std::vector<LatticeVector> basis;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return basis.size(); }
};

GroupLattice hermite_basis(std::span<const LatticeVector> vectors);

bool group_contains(const GroupLattice& lattice, const LatticeVector& v);

/// Integer coefficients of v in the Hermite basis, if v lies in the lattice.
std::optional<std::vector<Int>> lattice_coordinates(const GroupLattice& lattice,
                                                    const LatticeVector& v);

/// A rational polyhedral cone given by its extremal rays and an exact
/// halfspace description inside its linear span.
class Cone {
 public:
  Cone(std::size_t ambient_dim, std::vector<LatticeVector> rays,
       std::vector<LatticeVector> facet_normals, std::vector<LatticeVector> equations);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Dimension of the linear span.
  std::size_t dimension() const noexcept { return ambient_dim_ - equations_.size(); }

  /// Primitive extremal ray directions, lexicographically sorted.
  const std::vector<LatticeVector>& extremal_rays() const noexcept { return rays_; }
  /// Inward normals n with n.x >= 0 on the cone, one per facet.
  const std::vector<LatticeVector>& facet_normals() const noexcept { return normals_; }
  /// Integer basis of the orthogonal complement of the span.
  const std::vector<LatticeVector>& equations() const noexcept { return equations_; }

  bool contains(const LatticeVector& v) const;
  bool contains(std::span<const Rational> v) const;

 private:
  std::size_t ambient_dim_;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> normals_;
  std::vector<LatticeVector> equations_;
};

/// Computes the cone over `generators`. Throws NOT_POINTED if the cone
/// contains a line.
Cone extremal_rays(std::span<const LatticeVector> generators);

bool cone_membership(const Cone& cone, const LatticeVector& v);
bool cone_membership(const Cone& cone, std::span<const Rational> v);

/// Representatives of lattice / Z<rays> inside the half-open parallelepiped
/// spanned by the rays, lexicographically sorted.
std::vector<LatticeVector> coset_system(const GroupLattice& lattice,
                                        std::span<const LatticeVector> rays);

namespace linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(std::span<const LatticeVector> rows);
BigInt determinant(const std::vector<std::vector<BigInt>>& m);
/// Integer basis of {x : row . x = 0 for every row}.
std::vector<LatticeVector> integer_nullspace(std::span<const LatticeVector> rows,
                                             std::size_t dim);
/// Inverse of a nonsingular square rational matrix.
RationalMatrix inverse(RationalMatrix m);
/// One solution of A x = b (free variables set to zero), if the system is
/// consistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b);

}  // namespace linalg

}  // namespace sgclass
