#include "arng/modular.hpp"

#include <stdexcept>

namespace arng {

Montgomery::Montgomery(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1) == 0) throw std::invalid_argument("Montgomery needs an odd modulus >= 3");
  // ninv_ = -p^{-1} mod 2^64, by Newton iteration
  std::uint64_t inv = p;
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  ninv_ = ~inv + 1;
  // r2_ = (2^64)^2 mod p
  std::uint64_t r64 = (~static_cast<std::uint64_t>(0)) % p + 1;  // 2^64 mod p
  if (r64 == p) r64 = 0;
  r2_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r64) * r64 % p);
  one_ = to(1);
}

std::uint64_t Montgomery::pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t acc = one_;
  while (exp) {
    if (exp & 1) acc = mul(acc, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return acc;
}

bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x == q) return true;
    if (x % q == 0) return false;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Montgomery mont(x);
  const std::uint64_t minus_one = mont.sub(0, mont.one());
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t y = mont.pow(mont.to(a), d);
    if (y == mont.one() || y == minus_one) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      y = mont.mul(y, y);
      if (y == minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t random_prime_61(std::mt19937_64& rng) {
  const std::uint64_t lo = 1ULL << 61, hi = 1ULL << 62;
  std::uniform_int_distribution<std::uint64_t> dist(lo + 1, hi - 1);
  while (true) {
    std::uint64_t candidate = dist(rng) | 1;
    if (is_prime_u64(candidate)) return candidate;
  }
}

std::int64_t rank_mod_p(std::vector<std::uint64_t>& m, std::int64_t nrows,
                        std::int64_t ncols, const Montgomery& mont) {
  std::int64_t rank = 0;
  for (std::int64_t col = 0; col < ncols && rank < nrows; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t i = rank; i < nrows; ++i)
      if (m[i * ncols + col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (std::int64_t j = col; j < ncols; ++j)
        std::swap(m[pivot * ncols + j], m[rank * ncols + j]);
    const std::uint64_t inv = mont.inv(m[rank * ncols + col]);
    const std::uint64_t* prow = &m[rank * ncols];
    for (std::int64_t i = rank + 1; i < nrows; ++i) {
      std::uint64_t* row = &m[i * ncols];
      if (row[col] == 0) continue;
      const std::uint64_t factor = mont.mul(row[col], inv);
      row[col] = 0;
      for (std::int64_t j = col + 1; j < ncols; ++j)
        row[j] = mont.sub(row[j], mont.mul(factor, prow[j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace arng
