#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arng/cycle_type.hpp"
#include "arng/kperm.hpp"
#include "arng/numbers.hpp"
#include "arng/spectrum.hpp"

namespace arng {

constexpr std::int64_t kDefaultVertexBudget = 100000;

/// Explicit A(n,k): all k-permutations of [n] in lexicographic order of
/// their image vectors, adjacency between pairs agreeing in exactly k-1
/// positions. k(n-k)-regular.
struct ArrangementGraph {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> vertices;            // image vectors, lex order
  std::vector<std::vector<std::int32_t>> adjacency;  // sorted neighbor indices

  std::int64_t num_vertices() const { return static_cast<std::int64_t>(vertices.size()); }
  /// Lexicographic index of an image vector.
  std::int64_t index_of(const std::vector<int>& image) const;
};

ArrangementGraph build_arrangement_graph(int n, int k,
                                         std::int64_t budget = kDefaultVertexBudget);

/// Eigenvalues of an adjacency structure, certified exactly: candidates from
/// a floating eigensolve (clustering tolerance 1e-6), each multiplicity
/// confirmed as the nullity of A - lambda*I modulo a random prime > 2^61
/// (second prime on disagreement), accepted only when the multiplicities sum
/// to the vertex count. Throws consistency_error otherwise, reporting any
/// non-integer candidates instead of dropping them.
std::vector<std::pair<std::int64_t, std::int64_t>> certified_adjacency_spectrum(
    const std::vector<std::vector<std::int32_t>>& adjacency, std::uint64_t seed);

Spectrum exact_spectrum(const ArrangementGraph& g, std::uint64_t seed = 0);

struct EquitableReport {
  bool equitable = false;
  std::vector<CycleType> cells;  // nonempty cells, canonical order
  std::vector<std::int64_t> cell_sizes;
  MatI64 measured;  // neighbor counts between nonempty cells
  std::string witness;  // set when not equitable
};

/// Partitions the vertices by cycle type and measures neighbor counts;
/// equitable iff the count from a vertex of cell i into cell j never depends
/// on the vertex.
EquitableReport verify_equitable(const ArrangementGraph& g);

struct IncidenceReport {
  bool ok = false;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::string first_diff;  // set when the product check fails
  std::int64_t min_eigenvalue = 0;
  std::int64_t min_multiplicity = 0;
  std::int64_t multiplicity_bound = 0;
};

/// Builds the clique incidence matrix M of H_{n,k} ((k-1)-cliques versus
/// k-cliques), checks M^T M - kI against the adjacency matrix of A(n,k), and
/// confirms the smallest eigenvalue -k with its multiplicity bound. n >= 2k.
IncidenceReport incidence_check(int n, int k, std::int64_t budget = kDefaultVertexBudget,
                                std::uint64_t seed = 0);

struct LineGraphReport {
  bool ok = false;
  Spectrum via_line_lemma;
  Spectrum via_closed_form;
  Spectrum via_oracle;
};

/// A(n,2) is the line graph of K_{n,n} minus a perfect matching; checks that
/// the line-graph eigenvalue transfer, the closed form, and the brute-force
/// spectrum coincide. n >= 3.
LineGraphReport line_graph_check(int n, std::int64_t budget = kDefaultVertexBudget,
                                 std::uint64_t seed = 0);

/// "u v" per line, 0-based lexicographic vertex indices, u < v.
std::string edge_list(const ArrangementGraph& g);

}  // namespace arng
