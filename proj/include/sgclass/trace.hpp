#pragma once

// Trace-ideal queries for monomial (fractional) ideals I = (x^v : v in V_I).
//
// The trace criterion is stated for generators of S, but the argument only
// uses that I I^{-1} is Z^d-graded in a domain, so it applies verbatim to any
// a in S; trace_contains accepts every element of S.

#include <cstddef>
#include <vector>

#include "sgclass/invariants.hpp"
#include "sgclass/semigroup.hpp"

namespace sgclass {

/// u + v in S for every v in V_I (the exponent set of I^{-1}).
bool anti_ideal_member(const AffineSemigroup& s, const std::vector<LatticeVector>& ideal,
                       const LatticeVector& u);

/// x^a lies in tr(I): a = u + v with v in V_I and u in S - V_I.
bool trace_contains(const AffineSemigroup& s, const std::vector<LatticeVector>& ideal,
                    const LatticeVector& a);

/// Every generator of S lies in the trace of the canonical ideal.
bool is_nearly_gorenstein(const AffineSemigroup& s, const std::vector<LatticeVector>& canonical);

/// Number of monomials of degree b in the S-module generated by V_I.
Int ideal_degree_dimension(const AffineSemigroup& s, const std::vector<LatticeVector>& ideal,
                           Int b);

/// Drops every v with v - v' in S for some other v'; the result is the
/// minimal monomial generating set, sorted.
std::vector<LatticeVector> minimize_ideal(const AffineSemigroup& s,
                                          std::vector<LatticeVector> ideal);

/// Depth >= 2 and x^e in tr(I) for every extremal generator e force at least
/// two monomials in the initial degree of a non-principal I. Throws
/// PRINCIPAL_IDEAL for |V_I| < 2.
Verdict validate_trace_initial_degree(const AffineSemigroup& s,
                                      const std::vector<LatticeVector>& ideal,
                                      bool depth_at_least_two);

}  // namespace sgclass
