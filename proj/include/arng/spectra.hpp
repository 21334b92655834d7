#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arng/exact_linalg.hpp"
#include "arng/numbers.hpp"
#include "arng/quotient.hpp"
#include "arng/spectrum.hpp"

namespace arng {

/// Integer eigenvalues of an evaluated quotient matrix with their algebraic
/// multiplicities; residual is nontrivial iff the characteristic polynomial
/// does not split over the integers (never observed, but reported rather
/// than assumed away).
IntegerRoots quotient_eigenvalues(const MatI64& qn, std::int64_t gershgorin_bound);

/// Exact lambda-eigenvectors of the quotient matrix, pairwise orthogonal
/// under <u,v> = sum_i |V_i| u_i v_i. Stored as vectors of the similarity
/// transform S^{-1} x, which keeps every entry rational.
struct WeightedEigenbasis {
  std::int64_t eigenvalue = 0;
  std::vector<VecQ> vectors;
};

WeightedEigenbasis weighted_eigenbasis(const QuotientMatrix& q, std::int64_t n,
                                       std::int64_t lambda);

/// Complete spectrum of A(n,k) from the quotient matrix: integer eigenvalue
/// extraction, exact rational eigenspaces, and the walk-regular equitable
/// partition multiplicity formula nu * sum_j (x_j)_1^2 evaluated over the
/// rationals. Requires n >= 2k.
Spectrum graph_multiplicities(const QuotientMatrix& q, std::int64_t n);

/// Spectrum of the Johnson graph J(n,k): eigenvalues (k-i)(n-k-i)-i with
/// multiplicity C(n,i) - C(n,i-1), i = 0..k, coincident values merged.
Spectrum johnson_spectrum(std::int64_t n, std::int64_t k);

/// Closed-form spectrum of A(n,k) for k <= 7 (n >= k, within each form's
/// validity range; n = k yields the edgeless spectrum 0^(k!)).
Spectrum closed_form_spectrum(std::int64_t n, std::int64_t k);

/// True iff every Johnson eigenvalue appears in s with at least the Johnson
/// multiplicity.
bool johnson_containment_check(const Spectrum& s, std::int64_t n, std::int64_t k);

/// (-k, (n)_{k-1} * (n - 2k + 1)): the smallest eigenvalue of A(n,k) for
/// n >= 2k and a lower bound on its multiplicity.
std::pair<std::int64_t, std::int64_t> smallest_eigenvalue_bound(std::int64_t n,
                                                                std::int64_t k);

/// One eigenvalue family of a closed-form table: lambda = lam_slope*n +
/// lam_intercept with multiplicity mult_num(n) / mult_den. Families whose
/// printed source is corrupted carry the literal reading in printed_* and
/// a repaired polynomial in mult_num.
struct ClosedFamily {
  std::int64_t lam_slope = 0;
  std::int64_t lam_intercept = 0;
  std::vector<std::int64_t> mult_num;  // coefficient of n^i at index i
  std::int64_t mult_den = 1;
  bool printed_suspect = false;
  std::vector<std::int64_t> printed_num;  // set only when printed_suspect
  std::int64_t printed_den = 1;
  const char* note = "";

  std::int64_t lambda_at(std::int64_t n) const { return lam_slope * n + lam_intercept; }
  std::int64_t mult_at(std::int64_t n) const;
  /// The multiplicity the printed table assigns; rational because corrupted
  /// entries need not even be integral.
  Rational printed_mult_at(std::int64_t n) const;
};

/// The embedded eigenvalue table for A(n,k), k = 2..7.
const std::vector<ClosedFamily>& closed_form_table(int k);

/// Smallest n for which the closed-form table of A(n,k) is used.
std::int64_t closed_form_min_n(int k);

}  // namespace arng
