#include "arng/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "arng/errors.hpp"
#include "arng/modular.hpp"
#include "arng/spectra.hpp"

namespace arng {

namespace {

void enumerate_kperms(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
}

}  // namespace

std::int64_t ArrangementGraph::index_of(const std::vector<int>& image) const {
  // lexicographic rank: count smaller unused values position by position
  std::int64_t rank = 0;
  std::vector<char> used(n + 1, 0);
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int v = 1; v < image[i]; ++v)
      if (!used[v]) ++smaller;
    rank += smaller * falling_factorial_i64(n - 1 - i, k - 1 - i);
    used[image[i]] = 1;
  }
  return rank;
}

ArrangementGraph build_arrangement_graph(int n, int k, std::int64_t budget) {
  if (k < 1 || k > n) throw input_error("build_arrangement_graph requires 1 <= k <= n");
  const std::int64_t nu = falling_factorial_i64(n, k);
  if (nu > budget)
    throw budget_error("A(" + std::to_string(n) + "," + std::to_string(k) + ") has " +
                       std::to_string(nu) + " vertices, over the budget of " +
                       std::to_string(budget));

  ArrangementGraph g;
  g.n = n;
  g.k = k;
  enumerate_kperms(n, k, g.vertices);

  g.adjacency.resize(nu);
  std::vector<int> probe;
  for (std::int64_t idx = 0; idx < nu; ++idx) {
    const auto& image = g.vertices[idx];
    std::vector<char> in_image(n + 1, 0);
    for (int v : image) in_image[v] = 1;
    auto& nbrs = g.adjacency[idx];
    nbrs.reserve(static_cast<size_t>(k) * (n - k));
    for (int pos = 0; pos < k; ++pos) {
      probe = image;
      for (int w = 1; w <= n; ++w) {
        if (in_image[w]) continue;
        probe[pos] = w;
        nbrs.push_back(static_cast<std::int32_t>(g.index_of(probe)));
      }
    }
    std::sort(nbrs.begin(), nbrs.end());
  }
  return g;
}

std::vector<std::pair<std::int64_t, std::int64_t>> certified_adjacency_spectrum(
    const std::vector<std::vector<std::int32_t>>& adjacency, std::uint64_t seed) {
  const std::int64_t nu = static_cast<std::int64_t>(adjacency.size());
  constexpr double kTol = 1e-6;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nu, nu);
  for (std::int64_t i = 0; i < nu; ++i)
    for (std::int32_t j : adjacency[i]) a(i, j) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw consistency_error("floating eigensolver failed to converge");

  std::map<std::int64_t, std::int64_t> candidates;
  std::vector<double> non_integer;
  for (std::int64_t i = 0; i < nu; ++i) {
    const double lam = solver.eigenvalues()[i];
    const double rounded = std::round(lam);
    if (std::abs(lam - rounded) > kTol)
      non_integer.push_back(lam);
    else
      candidates[static_cast<std::int64_t>(rounded)]++;
  }
  if (!non_integer.empty()) {
    std::ostringstream os;
    os << "candidate eigenvalues farther than 1e-6 from an integer:";
    for (double v : non_integer) os << ' ' << v;
    throw consistency_error(os.str());
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t prime1 = random_prime_61(rng);
  const std::uint64_t prime2 = random_prime_61(rng);

  auto nullity_mod = [&](std::int64_t lambda, std::uint64_t p) {
    Montgomery mont(p);
    const std::uint64_t one = mont.one();
    const std::int64_t sp = static_cast<std::int64_t>(p);
    const std::uint64_t minus_lambda = static_cast<std::uint64_t>(((-lambda) % sp + sp) % sp);
    const std::uint64_t shift = mont.to(minus_lambda);
    std::vector<std::uint64_t> m(static_cast<size_t>(nu) * nu, 0);
    for (std::int64_t i = 0; i < nu; ++i) {
      for (std::int32_t j : adjacency[i]) m[i * nu + j] = one;
      m[i * nu + i] = mont.add(m[i * nu + i], shift);
    }
    return nu - rank_mod_p(m, nu, nu, mont);
  };

  // per-eigenvalue jobs are independent; split them across two workers
  std::vector<std::pair<std::int64_t, std::int64_t>> order(candidates.begin(),
                                                           candidates.end());
  std::vector<std::int64_t> certified(order.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= order.size()) break;
      const std::int64_t lambda = order[i].first;
      std::int64_t m1 = nullity_mod(lambda, prime1);
      if (m1 != order[i].second) {
        // float clustering and first prime disagree: decide with the second
        std::int64_t m2 = nullity_mod(lambda, prime2);
        if (m2 != m1)
          throw consistency_error("modular nullities disagree between primes");
        m1 = m2;
      }
      certified[i] = m1;
    }
  };
  auto fut = std::async(std::launch::async, worker);
  worker();
  fut.get();

  std::int64_t total = 0;
  for (std::int64_t m : certified) total += m;
  if (total != nu) {
    std::ostringstream os;
    os << "certified multiplicities sum to " << total << " over " << nu
       << " vertices; residual mass suggests non-integer eigenvalues";
    throw consistency_error(os.str());
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (size_t i = 0; i < order.size(); ++i)
    if (certified[i] > 0) pairs.emplace_back(order[i].first, certified[i]);
  return pairs;
}

Spectrum exact_spectrum(const ArrangementGraph& g, std::uint64_t seed) {
  Spectrum s;
  s.n = g.n;
  s.k = g.k;
  s.nu = g.num_vertices();
  s.pairs = certified_adjacency_spectrum(g.adjacency, seed);
  s.validate();
  return s;
}

EquitableReport verify_equitable(const ArrangementGraph& g) {
  EquitableReport report;
  const std::int64_t nu = g.num_vertices();

  std::map<CycleType, std::int64_t> cell_index;
  for (const auto& t : enumerate_types(g.k))
    if (cell_size(t, g.n) > 0) {
      std::int64_t idx = static_cast<std::int64_t>(report.cells.size());
      report.cells.push_back(t);
      report.cell_sizes.push_back(0);
      cell_index[t] = idx;
    }
  const std::int64_t cells = static_cast<std::int64_t>(report.cells.size());

  std::vector<std::int32_t> vertex_cell(nu);
  for (std::int64_t v = 0; v < nu; ++v) {
    KPermutation p(g.n, g.vertices[v]);
    auto it = cell_index.find(cycle_type(p));
    if (it == cell_index.end()) throw consistency_error("vertex falls in an empty cell");
    vertex_cell[v] = static_cast<std::int32_t>(it->second);
    report.cell_sizes[it->second]++;
  }

  report.measured = MatI64::Constant(cells, cells, -1);
  report.equitable = true;
  std::vector<std::int64_t> counts(cells);
  for (std::int64_t v = 0; v < nu; ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::int32_t w : g.adjacency[v]) counts[vertex_cell[w]]++;
    const std::int64_t i = vertex_cell[v];
    for (std::int64_t j = 0; j < cells; ++j) {
      std::int64_t& cell_entry = report.measured(i, j);
      if (cell_entry == -1) {
        cell_entry = counts[j];
      } else if (cell_entry != counts[j] && report.equitable) {
        report.equitable = false;
        std::ostringstream os;
        os << "cells (" << report.cells[i].str() << ", " << report.cells[j].str()
           << "): vertex " << v << " sees " << counts[j] << " neighbors, expected "
           << cell_entry;
        report.witness = os.str();
      }
    }
  }
  return report;
}

IncidenceReport incidence_check(int n, int k, std::int64_t budget, std::uint64_t seed) {
  if (n < 2 * k) throw unsupported_range("incidence_check requires n >= 2k");
  ArrangementGraph g = build_arrangement_graph(n, k, budget);
  const std::int64_t nu = g.num_vertices();

  IncidenceReport report;
  report.cols = nu;

  // Cliques of H_{n,k} are partial injections: a (k-1)-clique omits one part
  // r and assigns distinct columns to the rest; the k-cliques through it
  // extend position r with an unused column.
  std::vector<std::vector<int>> partial;
  enumerate_kperms(n, k - 1, partial);
  report.rows = static_cast<std::int64_t>(partial.size()) * k;

  Dense<std::int32_t> mtm = Dense<std::int32_t>::Zero(nu, nu);
  std::vector<std::int64_t> column_ones(nu, 0);
  std::vector<int> extended(k);
  std::vector<std::int64_t> cols_of_row;
  for (int r = 0; r < k; ++r) {
    for (const auto& sigma : partial) {
      std::vector<char> used(n + 1, 0);
      for (int v : sigma) used[v] = 1;
      // embed sigma into positions != r
      for (int i = 0, t = 0; i < k; ++i)
        if (i != r) extended[i] = sigma[t++];
      cols_of_row.clear();
      for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        extended[r] = v;
        cols_of_row.push_back(g.index_of(extended));
      }
      for (std::int64_t c1 : cols_of_row) {
        column_ones[c1]++;
        for (std::int64_t c2 : cols_of_row) mtm(c1, c2)++;
      }
    }
  }

  for (std::int64_t c = 0; c < nu; ++c)
    if (column_ones[c] != k) throw consistency_error("column of M without exactly k ones");

  report.ok = true;
  for (std::int64_t i = 0; i < nu && report.ok; ++i) {
    std::vector<char> row(nu, 0);
    for (std::int32_t j : g.adjacency[i]) row[j] = 1;
    for (std::int64_t j = 0; j < nu; ++j) {
      const std::int64_t expected = (i == j) ? k : 0;
      const std::int64_t got = mtm(i, j) - expected;
      if (got != row[j]) {
        report.ok = false;
        std::ostringstream os;
        os << "M^T M - kI differs from adjacency at (" << i << "," << j << "): " << got
           << " vs " << static_cast<int>(row[j]);
        report.first_diff = os.str();
        break;
      }
    }
  }

  Spectrum s = exact_spectrum(g, seed);
  report.min_eigenvalue = s.min_eigenvalue();
  report.min_multiplicity = s.multiplicity_of(-k);
  report.multiplicity_bound = smallest_eigenvalue_bound(n, k).second;
  if (report.min_eigenvalue != -k || report.min_multiplicity < report.multiplicity_bound)
    report.ok = false;
  return report;
}

LineGraphReport line_graph_check(int n, std::int64_t budget, std::uint64_t seed) {
  if (n < 3) throw input_error("line_graph_check requires n >= 3");
  LineGraphReport report;

  // H_n = K_{n,n} minus a perfect matching; vertices a_1..a_n, b_1..b_n
  std::vector<std::vector<std::int32_t>> h(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      h[i].push_back(static_cast<std::int32_t>(n + j));
      h[n + j].push_back(static_cast<std::int32_t>(i));
    }
  for (auto& row : h) std::sort(row.begin(), row.end());
  auto h_spectrum = certified_adjacency_spectrum(h, seed);

  std::vector<std::pair<std::int64_t, std::int64_t>> expected_h = {
      {-(n - 1), 1}, {-1, n - 1}, {1, n - 1}, {n - 1, 1}};
  if (h_spectrum != expected_h)
    throw consistency_error("H_n spectrum differs from {+-(n-1), +-1^{n-1}}");

  // line graph of an r-regular G: eigenvalues lambda_i + r - 2, plus -2
  // repeated (edges - vertices) times
  const std::int64_t r = n - 1;
  const std::int64_t edges = static_cast<std::int64_t>(n) * (n - 1);
  const std::int64_t verts = 2LL * n;
  std::vector<std::pair<std::int64_t, std::int64_t>> transferred;
  for (const auto& [lam, mult] : h_spectrum) transferred.emplace_back(lam + r - 2, mult);
  transferred.emplace_back(-2, edges - verts);
  report.via_line_lemma = merge_spectrum(n, 2, edges, std::move(transferred));
  report.via_line_lemma.validate();

  report.via_closed_form = closed_form_spectrum(n, 2);
  report.via_oracle = exact_spectrum(build_arrangement_graph(n, 2, budget), seed);
  report.ok = report.via_line_lemma == report.via_closed_form &&
              report.via_line_lemma == report.via_oracle;
  return report;
}

std::string edge_list(const ArrangementGraph& g) {
  std::ostringstream os;
  for (std::int64_t u = 0; u < g.num_vertices(); ++u)
    for (std::int32_t v : g.adjacency[u])
      if (u < v) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace arng
