#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arng/errors.hpp"

namespace arng {

struct CycleType;

/// An injective map [k] -> [n], stored as the length-k vector of images
/// (1-based values).
struct KPermutation {
  int n = 0;
  int k = 0;
  std::vector<int> image;

  KPermutation() = default;
  KPermutation(int n_, std::vector<int> image_);

  /// Parses a comma-separated literal like "2,3,4,6,7".
  static KPermutation parse(std::string_view literal, int n);

  /// Throws input_error if k/n bounds or injectivity fail.
  void validate() const;

  bool operator==(const KPermutation& o) const = default;
};

/// Disjoint cycles and paths covering [k]. A cycle (u1 ... ul) maps each
/// element to the next and ul back to u1. A path (u1 ... ul v] additionally
/// maps ul to the head v, which lies outside [k]; its length is the arc
/// count l, so the stored sequence has l+1 elements.
struct CyclicDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> paths;

  bool operator==(const CyclicDecomposition& o) const = default;
};

/// Directed graph on [k] union Im(p) with arcs (u, p(u)).
struct BasicGraph {
  std::vector<int> vertices;                 // sorted
  std::vector<std::pair<int, int>> arcs;     // (u, p(u)) for u in [k]
};

/// Decomposes p into disjoint cycles and paths. Canonical form: each cycle
/// is rotated so its minimum element comes first; cycles precede paths and
/// each group is sorted by first element.
CyclicDecomposition decompose(const KPermutation& p);

/// Inverse of decompose. Validates the decomposition invariants for (n, k)
/// and throws input_error on violation.
KPermutation recompose(const CyclicDecomposition& d, int n, int k);

CycleType cycle_type(const KPermutation& p);

BasicGraph basic_graph(const KPermutation& p);

/// Multiset of (component length, is_cycle) signatures; complete isomorphism
/// invariant for basic graphs since every component is a cycle or a path.
std::vector<std::pair<int, bool>> component_signature(const CyclicDecomposition& d);

/// Renders "(1 2 3 4 6](5 7]"-style notation.
std::string to_string(const CyclicDecomposition& d);

}  // namespace arng
