#include "arng/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

#include <gmp.h>

#include "arng/errors.hpp"

namespace arng {

namespace {

inline mpz_ptr raw(BigInt& v) { return v.backend().data(); }
inline mpz_srcptr raw(const BigInt& v) { return v.backend().data(); }

// out = a * b for row-major square big-integer matrices, accumulating with
// mpz_addmul to avoid temporaries in the hot loop.
void matmul(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
            std::vector<BigInt>& out, std::int64_t m) {
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) mpz_set_ui(raw(out[i * m + j]), 0);
    for (std::int64_t l = 0; l < m; ++l) {
      mpz_srcptr ail = raw(a[i * m + l]);
      if (mpz_sgn(ail) == 0) continue;
      const BigInt* brow = &b[l * m];
      BigInt* orow = &out[i * m];
      for (std::int64_t j = 0; j < m; ++j)
        mpz_addmul(raw(orow[j]), ail, raw(brow[j]));
    }
  }
}

}  // namespace

std::vector<BigInt> char_poly(const MatI64& A) {
  if (A.rows() != A.cols()) throw input_error("char_poly needs a square matrix");
  const std::int64_t m = A.rows();
  std::vector<BigInt> a(m * m);
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) a[i * m + j] = A(i, j);

  std::vector<BigInt> coeffs(m + 1);
  coeffs[m] = 1;
  std::vector<BigInt> M(m * m), AM(m * m);
  for (std::int64_t i = 0; i < m; ++i) M[i * m + i] = 1;

  for (std::int64_t step = 1; step <= m; ++step) {
    matmul(a, M, AM, m);
    BigInt tr = 0;
    for (std::int64_t i = 0; i < m; ++i) tr += AM[i * m + i];
    BigInt c = -tr / step;  // division is exact
    coeffs[m - step] = c;
    if (step < m) {
      M.swap(AM);
      for (std::int64_t i = 0; i < m; ++i) M[i * m + i] += c;
    }
  }
  return coeffs;
}

IntegerRoots integer_roots(std::vector<BigInt> coeffs, std::int64_t bound) {
  if (coeffs.empty() || coeffs.back() != 1)
    throw input_error("integer_roots expects a monic polynomial");
  IntegerRoots out;

  // roots at 0: trailing zero coefficients
  int zero_mult = 0;
  while (coeffs.size() > 1 && coeffs.front() == 0) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(0, zero_mult);

  auto deflate = [&](std::int64_t r) {
    // synthetic division by (x - r); remainder known to vanish
    std::vector<BigInt> next(coeffs.size() - 1);
    BigInt carry = 0;
    for (std::int64_t i = static_cast<std::int64_t>(coeffs.size()) - 1; i >= 1; --i) {
      carry = coeffs[i] + carry * r;
      next[i - 1] = carry;
    }
    coeffs = std::move(next);
  };
  auto value_at = [&](std::int64_t r) {
    BigInt v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * r + *it;
    return v;
  };

  for (std::int64_t d = -bound; d <= bound && coeffs.size() > 1; ++d) {
    if (d == 0) continue;
    if (coeffs.front() % d != 0) continue;
    int mult = 0;
    while (coeffs.size() > 1 && value_at(d) == 0) {
      deflate(d);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(d, mult);
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = std::move(coeffs);
  return out;
}

std::vector<VecQ> rational_kernel(const MatI64& A) {
  const std::int64_t rows = A.rows(), cols = A.cols();
  std::vector<BigInt> m(rows * cols);
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::int64_t j = 0; j < cols; ++j) m[i * cols + j] = A(i, j);

  // Bareiss fraction-free row echelon
  std::vector<std::pair<std::int64_t, std::int64_t>> pivots;  // (row, col)
  BigInt prev = 1, t = 0;
  std::int64_t rr = 0;
  for (std::int64_t col = 0; col < cols && rr < rows; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t i = rr; i < rows; ++i)
      if (m[i * cols + col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rr)
      for (std::int64_t j = 0; j < cols; ++j) m[pivot * cols + j].swap(m[rr * cols + j]);
    for (std::int64_t i = rr + 1; i < rows; ++i) {
      for (std::int64_t j = col + 1; j < cols; ++j) {
        mpz_mul(t.backend().data(), m[rr * cols + col].backend().data(),
                m[i * cols + j].backend().data());
        mpz_submul(t.backend().data(), m[i * cols + col].backend().data(),
                   m[rr * cols + j].backend().data());
        mpz_divexact(m[i * cols + j].backend().data(), t.backend().data(),
                     prev.backend().data());
      }
      m[i * cols + col] = 0;
    }
    prev = m[rr * cols + col];
    pivots.emplace_back(rr, col);
    ++rr;
  }

  std::vector<char> is_pivot(cols, 0);
  for (auto& [r, c] : pivots) is_pivot[c] = 1;

  std::vector<VecQ> basis;
  for (std::int64_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    VecQ v = VecQ::Zero(cols);
    v[f] = 1;
    for (std::int64_t p = static_cast<std::int64_t>(pivots.size()) - 1; p >= 0; --p) {
      auto [r, c] = pivots[p];
      Rational sum = 0;
      for (std::int64_t j = c + 1; j < cols; ++j)
        if (v[j] != 0 && m[r * cols + j] != 0) sum += Rational(m[r * cols + j]) * v[j];
      v[c] = -sum / Rational(m[r * cols + c]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BigInt weighted_dot(const std::vector<BigInt>& u, const std::vector<BigInt>& v,
                    const std::vector<BigInt>& w) {
  BigInt acc = 0, t = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0 || v[i] == 0) continue;
    mpz_mul(t.backend().data(), u[i].backend().data(), v[i].backend().data());
    mpz_addmul(acc.backend().data(), t.backend().data(), w[i].backend().data());
  }
  return acc;
}

namespace {

// scale a rational vector to a primitive integer vector
std::vector<BigInt> primitive(const VecQ& v) {
  BigInt lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    BigInt den = denominator(v[i]);
    mpz_lcm(lcm.backend().data(), lcm.backend().data(), den.backend().data());
  }
  std::vector<BigInt> out(v.size());
  BigInt content = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * Rational(lcm);
    out[i] = numerator(scaled);
    mpz_gcd(content.backend().data(), content.backend().data(), out[i].backend().data());
  }
  if (content > 1)
    for (auto& x : out) mpz_divexact(x.backend().data(), x.backend().data(),
                                     content.backend().data());
  return out;
}

void reduce_content(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (auto& x : v) mpz_gcd(g.backend().data(), g.backend().data(), x.backend().data());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.backend().data(), x.backend().data(), g.backend().data());
}

}  // namespace

std::vector<std::vector<BigInt>> weighted_gram_schmidt(const std::vector<VecQ>& basis,
                                                       const std::vector<BigInt>& weights) {
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> norms;  // cached <u_i, u_i>
  for (const auto& b : basis) {
    std::vector<BigInt> v = primitive(b);
    for (size_t i = 0; i < out.size(); ++i) {
      BigInt proj = weighted_dot(v, out[i], weights);
      if (proj == 0) continue;
      // v <- norm_i * v - proj * u_i, staying integral
      for (size_t x = 0; x < v.size(); ++x) v[x] = norms[i] * v[x] - proj * out[i][x];
      reduce_content(v);
    }
    norms.push_back(weighted_dot(v, v, weights));
    if (norms.back() == 0) throw consistency_error("weighted Gram-Schmidt met a null vector");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace arng
