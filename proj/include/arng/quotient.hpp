#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "arng/cycle_type.hpp"
#include "arng/numbers.hpp"

namespace arng {

/// slope * n + intercept, with 64-bit integer coefficients.
struct AffineInN {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;

  std::int64_t operator()(std::int64_t n) const { return slope * n + intercept; }
  AffineInN& operator+=(const AffineInN& o) {
    slope += o.slope;
    intercept += o.intercept;
    return *this;
  }
  bool operator==(const AffineInN& o) const = default;
};

/// Quotient matrix of the cycle-type partition of A(n,k), symbolic in n.
/// Square of dimension c(k); rows/columns indexed by `order`.
struct QuotientMatrix {
  int k = 0;
  std::vector<CycleType> order;
  std::vector<AffineInN> entries;  // row-major, order.size()^2

  std::int64_t dim() const { return static_cast<std::int64_t>(order.size()); }
  const AffineInN& at(std::int64_t i, std::int64_t j) const {
    return entries[i * dim() + j];
  }
  AffineInN& at(std::int64_t i, std::int64_t j) { return entries[i * dim() + j]; }
};

/// Cycle types of the neighbors of any vertex of type `source` in A(n,k),
/// with the neighbor count into each target type as a function of n.
std::map<CycleType, AffineInN> neighbor_distribution(const CycleType& source, int k);

/// Assembles the full quotient matrix. Practical bound k <= 8 (c(8) = 185).
QuotientMatrix build_quotient(int k, TypeOrdering ordering = TypeOrdering::canonical);

/// Entry-wise evaluation at a concrete n >= 2k (every cell nonempty there).
/// Smaller n is served by the brute-force oracle and throws unsupported_range.
MatI64 evaluate(const QuotientMatrix& q, std::int64_t n);

/// "3n_3"-style token for one entry (n_i stands for n - i).
std::string affine_token(const AffineInN& a);

std::string pretty(const QuotientMatrix& q);

nlohmann::json to_json(const QuotientMatrix& q);
nlohmann::json to_json_evaluated(const QuotientMatrix& q, std::int64_t n);
/// Same schema as to_json_evaluated, for a measured matrix over the given cells.
nlohmann::json measured_to_json(int k, std::int64_t n, const std::vector<CycleType>& order,
                                const MatI64& entries);

}  // namespace arng
