#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arng/errors.hpp"

namespace arng {

enum class TypeOrdering { canonical, paper };

/// A partition of k into parts of two kinds: cycle lengths (unprimed) and
/// path lengths (primed), each with multiplicities.
struct CycleType {
  std::map<int, int> cycle_mults;  // length -> a_i >= 1
  std::map<int, int> path_mults;   // length -> b_i >= 1
  int k = 0;

  /// s = number of paths = number of primed parts.
  int num_paths() const;
  int num_cycles() const;

  /// Part lists sorted descending, e.g. {2,1,1}.
  std::vector<int> cycle_parts_desc() const;
  std::vector<int> path_parts_desc() const;

  CycleType with_cycle_added(int len) const;    // len == 0 is a no-op
  CycleType with_cycle_removed(int len) const;
  CycleType with_path_added(int len) const;     // len == 0 is a no-op
  CycleType with_path_removed(int len) const;

  /// "1 1 2'" for a_1 = 2, b_2 = 1: unprimed parts ascending, then primed
  /// parts ascending, space separated.
  std::string str() const;
  static CycleType parse(std::string_view text);

  void validate() const;

  bool operator==(const CycleType& o) const;
  /// Canonical order: ascending by s, then descending lexicographic on the
  /// descending-sorted unprimed partition, then on the primed one.
  bool operator<(const CycleType& o) const;
};

/// All c(k) cycle types of weight k in the requested order. The paper
/// ordering reproduces the printed matrix layouts and exists for k = 3, 4
/// only; other k throw unsupported_range.
std::vector<CycleType> enumerate_types(int k, TypeOrdering ordering = TypeOrdering::canonical);

/// Number of partitions of k into parts of two kinds, via the convolution
/// c(k) = sum p(i) p(k-i) of the integer-partition counting function.
std::int64_t count_c(int k);

/// Number of k-permutations of [n] with the given cycle type:
/// k! / (prod i^{a_i} a_i! b_i!) * (n-k)_s. Zero iff s > n-k.
std::int64_t cell_size(const CycleType& t, std::int64_t n);

/// True iff the cell sizes of all types of weight k sum to (n)_k.
bool partition_sum_check(std::int64_t n, int k);

}  // namespace arng
