#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace arng {

/// Montgomery arithmetic modulo an odd prime p < 2^63.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t to(std::uint64_t x) const { return mul(x % p_, r2_); }
  std::uint64_t from(std::uint64_t x) const { return mul(x, 1); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t m = static_cast<std::uint64_t>(t) * ninv_;
    std::uint64_t r = static_cast<std::uint64_t>(
        (t + static_cast<unsigned __int128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
  std::uint64_t one() const { return one_; }

 private:
  std::uint64_t p_, ninv_, r2_, one_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t x);

/// Uniform random prime in (2^61, 2^62).
std::uint64_t random_prime_61(std::mt19937_64& rng);

/// Rank of a row-major nrows x ncols matrix whose entries are already in
/// Montgomery form. Destroys the matrix.
std::int64_t rank_mod_p(std::vector<std::uint64_t>& m, std::int64_t nrows,
                        std::int64_t ncols, const Montgomery& mont);

}  // namespace arng
