#pragma once

// Exact encoding of a simplicial graded affine semigroup S as a union of
// monomial up-sets, one per coset of Z S modulo the lattice spanned by the
// degree-one extremal generators e_1..e_d:
//
//   S = U_p { p + m.e : m in M_p },   M_p = up-set in N^d with minimal set Min(M_p).
//
// The normalization is U_p (p + N^d.e), so the holes of coset p are N^d \ M_p.

#include <cstddef>
#include <optional>
#include <vector>

#include "sgclass/semigroup.hpp"

namespace sgclass {

using RayPoint = std::vector<Int>;

class Staircase {
 public:
  struct Decomposition {
    std::size_t coset;
    RayPoint z;  // v = residue(coset) + sum z_i e_i
  };

  /// Assembles a staircase from parts; the result is uncertified.
  Staircase(std::vector<LatticeVector> rays, std::vector<LatticeVector> residues,
            std::vector<std::vector<RayPoint>> min_elements, const Grading& grading);

  std::size_t dim() const noexcept { return rays_.size(); }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<LatticeVector>& residues() const noexcept { return residues_; }
  /// Antichain Min(M_p) for each coset, lexicographically sorted.
  const std::vector<std::vector<RayPoint>>& min_elements() const noexcept { return min_; }
  Int residue_degree(std::size_t coset) const { return residue_degrees_[coset]; }
  bool certified() const noexcept { return certified_; }

  /// nullopt when v is outside the group.
  std::optional<Decomposition> decompose(const LatticeVector& v) const;
  LatticeVector compose(std::size_t coset, const RayPoint& z) const;
  Int degree(std::size_t coset, const RayPoint& z) const;

  /// Whether v lies in the represented set, regardless of certification.
  bool represents(const LatticeVector& v) const;
  bool represents(std::size_t coset, const RayPoint& z) const;

  /// Largest coordinate among all minimal elements (0 if none).
  Int max_threshold() const;

 private:
  friend Staircase build_staircase(const AffineSemigroup&, Int);
  friend bool certify_staircase(Staircase&, const AffineSemigroup&);

  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> residues_;
  std::vector<std::vector<RayPoint>> min_;
  std::vector<Int> residue_degrees_;
  // Rational inverse of the ray matrix on a set of independent columns:
  // lambda_i = (sum_k v[cols_k] * adj_[k][i]) / det_.
  std::vector<std::size_t> cols_;
  std::vector<std::vector<Int>> adj_;
  Int det_ = 1;
  std::vector<std::pair<LatticeVector, std::size_t>> residue_index_;
  bool certified_ = false;
};

/// Enumerates S up to `horizon`, collects minimal elements per coset, and
/// certifies. Throws HORIZON_TOO_SMALL if certification fails.
Staircase build_staircase(const AffineSemigroup& s, Int horizon);

/// Builds with doubling horizons, at most `retries` extra attempts.
Staircase build_certified_staircase(const AffineSemigroup& s, Int initial_horizon,
                                    int retries = 3);

/// Checks the three closure conditions that make the represented set equal
/// to S; marks the staircase certified on success.
bool certify_staircase(Staircase& t, const AffineSemigroup& s);

bool staircase_member(const Staircase& t, const LatticeVector& v);

/// Elements of the normalization outside S with degree <= bound, sorted.
std::vector<LatticeVector> holes(const Staircase& t, Int degree_bound);

/// w + m e_i lies outside S for every m >= 0 (i is 0-based).
bool c_set_member(const Staircase& t, std::size_t i, const LatticeVector& w);

/// w + F lies outside S, where F is the face spanned by every ray except e_i.
/// Coincides with c_set_member(t, 1 - i, w) when dim = 2.
bool avoids_facet(const Staircase& t, std::size_t i, const LatticeVector& w);

bool is_cohen_macaulay(const Staircase& t);

/// Every hole lies on a full line of holes (dim 2 only).
bool depth_at_least_two(const Staircase& t);

/// Number of minimal elements in each degree: the counts of S modulo the
/// ideal generated by the rays, indexed by degree.
std::vector<Int> artinian_counts(const Staircase& t);

}  // namespace sgclass
