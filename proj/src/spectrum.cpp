#include "arng/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "arng/errors.hpp"
#include "arng/numbers.hpp"

namespace arng {

std::int64_t Spectrum::multiplicity_of(std::int64_t lambda) const {
  for (const auto& [l, m] : pairs)
    if (l == lambda) return m;
  return 0;
}

std::int64_t Spectrum::min_eigenvalue() const {
  if (pairs.empty()) throw consistency_error("empty spectrum");
  return pairs.front().first;
}

std::int64_t Spectrum::max_eigenvalue() const {
  if (pairs.empty()) throw consistency_error("empty spectrum");
  return pairs.back().first;
}

void Spectrum::validate() const {
  if (nu != falling_factorial_i64(n, static_cast<int>(k)))
    throw consistency_error("nu differs from (n)_k");
  BigInt total = 0, trace = 0, square = 0;
  for (const auto& [l, m] : pairs) {
    if (m <= 0) throw consistency_error("non-positive multiplicity");
    total += m;
    trace += BigInt(l) * m;
    square += BigInt(l) * l * m;
  }
  if (total != nu) throw consistency_error("multiplicities do not sum to nu");
  if (trace != 0) throw consistency_error("spectrum trace is nonzero");
  const BigInt degree = BigInt(k) * (n - k);
  if (square != BigInt(nu) * degree)
    throw consistency_error("sum of lambda^2 mult differs from nu*k(n-k)");
  if (n > k) {
    if (pairs.empty() || BigInt(pairs.back().first) != degree || pairs.back().second != 1)
      throw consistency_error("top eigenvalue k(n-k) must be simple");
  }
}

Spectrum merge_spectrum(std::int64_t n, std::int64_t k, std::int64_t nu,
                        std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
  std::map<std::int64_t, std::int64_t> acc;
  for (const auto& [l, m] : pairs) acc[l] += m;
  Spectrum s;
  s.n = n;
  s.k = k;
  s.nu = nu;
  for (const auto& [l, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw consistency_error("negative merged multiplicity");
    s.pairs.emplace_back(l, m);
  }
  return s;
}

std::string to_csv(const Spectrum& s) {
  std::ostringstream os;
  for (const auto& [l, m] : s.pairs) os << l << ',' << m << '\n';
  return os.str();
}

std::string to_pretty(const Spectrum& s) {
  std::ostringstream os;
  os << "A(" << s.n << "," << s.k << "): " << s.nu << " vertices\n";
  for (const auto& [l, m] : s.pairs) os << l << "^[" << m << "]\n";
  return os.str();
}

nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [l, m] : s.pairs) pairs.push_back({{"lambda", l}, {"mult", m}});
  return {{"n", s.n}, {"k", s.k}, {"nu", s.nu}, {"pairs", pairs}};
}

bool operator==(const Spectrum& a, const Spectrum& b) {
  return a.n == b.n && a.k == b.k && a.nu == b.nu && a.pairs == b.pairs;
}

}  // namespace arng
