#include "arng/numbers.hpp"

#include <limits>

namespace arng {

BigInt falling_factorial(BigInt n, int len) {
  if (len < 0) throw input_error("falling factorial needs len >= 0");
  BigInt out = 1;
  for (int i = 0; i < len; ++i) out *= (n - i);
  return out;
}

std::int64_t falling_factorial_i64(std::int64_t n, int len) {
  return to_i64(falling_factorial(BigInt(n), len));
}

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw unsupported_range("value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);  // exact at every step
  }
  return out;
}

}  // namespace arng
