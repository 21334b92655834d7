#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arng/numbers.hpp"

namespace arng {

/// Monic characteristic polynomial det(xI - A), exact over the integers via
/// the Faddeev-LeVerrier recurrence. coeffs[i] multiplies x^i; coeffs[m] = 1.
std::vector<BigInt> char_poly(const MatI64& A);

struct IntegerRoots {
  std::vector<std::pair<std::int64_t, int>> roots;  // (root, multiplicity), ascending
  std::vector<BigInt> residual;  // monic factor left after deflation; size 1 iff fully split

  bool split() const { return residual.size() <= 1; }
  int total_multiplicity() const {
    int t = 0;
    for (auto& [r, m] : roots) t += m;
    return t;
  }
};

/// Integer roots of a monic integer polynomial, with multiplicities.
/// Candidates are the divisors of the trailing nonzero coefficient with
/// absolute value at most `bound` (plus the root 0 from trailing zeros).
IntegerRoots integer_roots(std::vector<BigInt> coeffs, std::int64_t bound);

/// Rational basis of the nullspace of A, via fraction-free (Bareiss)
/// elimination and exact back-substitution.
std::vector<VecQ> rational_kernel(const MatI64& A);

/// <u, v> = sum_i w_i u_i v_i.
BigInt weighted_dot(const std::vector<BigInt>& u, const std::vector<BigInt>& v,
                    const std::vector<BigInt>& w);

/// Gram-Schmidt under the weighted inner product, in exact integer
/// arithmetic: each output vector is primitive (content 1) and pairwise
/// weighted-orthogonal to the others; spans of prefixes are preserved.
std::vector<std::vector<BigInt>> weighted_gram_schmidt(const std::vector<VecQ>& basis,
                                                       const std::vector<BigInt>& weights);

}  // namespace arng
