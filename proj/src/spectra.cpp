#include "arng/spectra.hpp"

#include <algorithm>

#include "arng/errors.hpp"

namespace arng {

IntegerRoots quotient_eigenvalues(const MatI64& qn, std::int64_t gershgorin_bound) {
  IntegerRoots roots = integer_roots(char_poly(qn), gershgorin_bound);
  return roots;
}

WeightedEigenbasis weighted_eigenbasis(const QuotientMatrix& q, std::int64_t n,
                                       std::int64_t lambda) {
  MatI64 shifted = evaluate(q, n);
  for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;

  std::vector<BigInt> weights(q.order.size());
  for (size_t i = 0; i < q.order.size(); ++i) weights[i] = cell_size(q.order[i], n);

  std::vector<VecQ> kernel = rational_kernel(shifted);
  if (kernel.empty()) throw input_error("lambda is not an eigenvalue of the quotient");

  WeightedEigenbasis basis;
  basis.eigenvalue = lambda;
  for (auto& v : weighted_gram_schmidt(kernel, weights)) {
    VecQ w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[static_cast<Eigen::Index>(i)] = Rational(v[i]);
    basis.vectors.push_back(std::move(w));
  }
  return basis;
}

Spectrum graph_multiplicities(const QuotientMatrix& q, std::int64_t n) {
  if (n < 2LL * q.k)
    throw unsupported_range("graph_multiplicities requires n >= 2k");
  const MatI64 qn = evaluate(q, n);
  const std::int64_t degree = static_cast<std::int64_t>(q.k) * (n - q.k);
  const std::int64_t nu = falling_factorial_i64(n, q.k);

  IntegerRoots roots = quotient_eigenvalues(qn, degree);
  if (!roots.split())
    throw consistency_error(
        "quotient characteristic polynomial did not split over the integers");

  // index of the singleton cell (the all-fixed-points type)
  std::int64_t one_idx = -1;
  for (size_t i = 0; i < q.order.size(); ++i)
    if (q.order[i].num_paths() == 0 && q.order[i].cycle_mults.count(1) &&
        q.order[i].cycle_mults.at(1) == q.k) {
      one_idx = static_cast<std::int64_t>(i);
      break;
    }
  if (one_idx < 0) throw consistency_error("singleton cell missing from the order");

  std::vector<BigInt> weights(q.order.size());
  for (size_t i = 0; i < q.order.size(); ++i) weights[i] = cell_size(q.order[i], n);

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& [lambda, alg_mult] : roots.roots) {
    MatI64 shifted = qn;
    for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
    std::vector<VecQ> kernel = rational_kernel(shifted);
    if (static_cast<int>(kernel.size()) != alg_mult)
      throw consistency_error("eigenspace dimension differs from algebraic multiplicity");

    auto ortho = weighted_gram_schmidt(kernel, weights);
    Rational mult = 0;
    for (const auto& v : ortho) {
      BigInt coord = v[one_idx];
      mult += Rational(coord * coord) / Rational(weighted_dot(v, v, weights));
    }
    mult *= nu;
    BigInt num = numerator(mult), den = denominator(mult);
    if (den != 1 || num <= 0)
      throw consistency_error("graph multiplicity is not a positive integer");
    pairs.emplace_back(lambda, to_i64(num));
  }

  Spectrum s = merge_spectrum(n, q.k, nu, std::move(pairs));
  s.validate();
  return s;
}

Spectrum johnson_spectrum(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) throw input_error("johnson_spectrum requires 0 <= k <= n");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t i = 0; i <= k; ++i) {
    std::int64_t lambda = (k - i) * (n - k - i) - i;
    BigInt mult = binomial(n, i) - binomial(n, i - 1);
    pairs.emplace_back(lambda, to_i64(mult));
  }
  Spectrum s = merge_spectrum(n, k, to_i64(binomial(n, k)), std::move(pairs));
  BigInt total = 0;
  for (auto& [l, m] : s.pairs) total += m;
  if (total != binomial(n, k))
    throw consistency_error("Johnson multiplicities do not sum to C(n,k)");
  return s;
}

bool johnson_containment_check(const Spectrum& s, std::int64_t n, std::int64_t k) {
  for (const auto& [lambda, mult] : johnson_spectrum(n, k).pairs)
    if (s.multiplicity_of(lambda) < mult) return false;
  return true;
}

std::pair<std::int64_t, std::int64_t> smallest_eigenvalue_bound(std::int64_t n,
                                                                std::int64_t k) {
  if (n < 2 * k) throw unsupported_range("smallest_eigenvalue_bound requires n >= 2k");
  return {-k, falling_factorial_i64(n, static_cast<int>(k) - 1) * (n - 2 * k + 1)};
}

}  // namespace arng
