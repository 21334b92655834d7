#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace arng {

/// Multiset of (integer eigenvalue, multiplicity) pairs, ascending by
/// eigenvalue, for a graph on nu vertices.
struct Spectrum {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t nu = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

  std::int64_t multiplicity_of(std::int64_t lambda) const;
  std::int64_t min_eigenvalue() const;
  std::int64_t max_eigenvalue() const;

  /// Checks the arrangement-graph invariants: multiplicities sum to nu =
  /// (n)_k, trace 0, sum of lambda^2 * mult = nu * k(n-k), and for n > k the
  /// top eigenvalue k(n-k) is simple. Throws consistency_error on failure.
  void validate() const;
};

/// Sums multiplicities of equal eigenvalues, drops zero entries, sorts.
/// Negative totals throw consistency_error.
Spectrum merge_spectrum(std::int64_t n, std::int64_t k, std::int64_t nu,
                        std::vector<std::pair<std::int64_t, std::int64_t>> pairs);

std::string to_csv(const Spectrum& s);
std::string to_pretty(const Spectrum& s);
nlohmann::json to_json(const Spectrum& s);

bool operator==(const Spectrum& a, const Spectrum& b);

}  // namespace arng
