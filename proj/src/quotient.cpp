#include "arng/quotient.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace arng {

// The neighbor rules below enumerate, for one arc-head change in the basic
// graph of a representative, every target type reachable from `source`
// together with the number of neighbors of that type. `f` denotes the
// count n - k - |B| of ground-set elements not on the basic graph.
std::map<CycleType, AffineInN> neighbor_distribution(const CycleType& source, int k) {
  source.validate();
  if (source.k != k) throw input_error("cycle type weight differs from k");

  std::map<CycleType, AffineInN> out;
  const int s = source.num_paths();
  const std::int64_t ks = static_cast<std::int64_t>(k) + s;
  // f = n - (k + s) as an affine form, scaled by m
  auto f_times = [ks](std::int64_t m) { return AffineInN{m, -m * ks}; };
  auto constant = [](std::int64_t c) { return AffineInN{0, c}; };

  // Cycle edges: redirect one arc of an i-cycle.
  for (auto [i, a] : source.cycle_mults) {
    // to a fresh element: the cycle opens into an i-path
    out[source.with_cycle_removed(i).with_path_added(i)] +=
        f_times(static_cast<std::int64_t>(i) * a);
    // to the tail of a j-path: cycle and path merge into an (i+j)-path
    for (auto [j, b] : source.path_mults) {
      out[source.with_cycle_removed(i).with_path_removed(j).with_path_added(i + j)] +=
          constant(static_cast<std::int64_t>(a) * b * i);
    }
  }

  // Path edges: redirect the arc leaving the l-th element of a j-path.
  for (auto [j, b] : source.path_mults) {
    for (int l = 1; l <= j; ++l) {
      // back to the path's own tail: an l-cycle closes, a (j-l)-path remains
      out[source.with_path_removed(j).with_cycle_added(l).with_path_added(j - l)] +=
          constant(b);
      // to the tail of another path of length m (multiplicity c in B minus
      // the split path itself). Unordered {j,m} pairs are produced exactly
      // once: the j < m orientation owns the doubled count, and for m < j
      // only the splits without a mirrored counterpart contribute.
      for (auto [m, c0] : source.path_mults) {
        const int c = (m == j) ? c0 - 1 : c0;
        if (c <= 0) continue;
        if (m + l == j) continue;  // reproduces the source type; counted on the diagonal
        CycleType target = source.with_path_removed(j)
                               .with_path_removed(m)
                               .with_path_added(m + l)
                               .with_path_added(j - l);
        if (m == j) {
          out[target] += constant(static_cast<std::int64_t>(b) * c);
        } else if (m > j) {
          out[target] += constant(2LL * b * c);
        } else if (m - j + l < 1) {
          out[target] += constant(static_cast<std::int64_t>(b) * c);
        }
      }
    }
    // to a fresh element: the j-path splits into an l-path and a (j-l)-path.
    // l = j keeps the type and belongs to the diagonal, so l < j here; the
    // unordered split {l, j-l} is produced once.
    for (int l = 1; 2 * l <= j; ++l) {
      const std::int64_t factor = (j == 2 * l) ? b : 2LL * b;
      out[source.with_path_removed(j).with_path_added(l).with_path_added(j - l)] +=
          f_times(factor);
    }
  }

  // Diagonal: |B| head redirections to fresh elements, plus the splits with
  // m + l == j, one per unordered pair of distinct path lengths.
  if (s > 0) {
    AffineInN diag = f_times(s);
    std::int64_t cross = 0;
    for (auto it = source.path_mults.begin(); it != source.path_mults.end(); ++it)
      for (auto jt = std::next(it); jt != source.path_mults.end(); ++jt)
        cross += static_cast<std::int64_t>(it->second) * jt->second;
    diag += AffineInN{0, cross};
    out[source] += diag;
  }

  return out;
}

QuotientMatrix build_quotient(int k, TypeOrdering ordering) {
  if (k < 1 || k > 8) throw input_error("build_quotient supports 1 <= k <= 8");
  QuotientMatrix q;
  q.k = k;
  q.order = enumerate_types(k, ordering);
  const std::int64_t m = q.dim();
  q.entries.assign(m * m, AffineInN{});

  std::map<CycleType, std::int64_t> index;
  for (std::int64_t i = 0; i < m; ++i) index[q.order[i]] = i;

  for (std::int64_t i = 0; i < m; ++i) {
    for (const auto& [target, count] : neighbor_distribution(q.order[i], k)) {
      auto it = index.find(target);
      if (it == index.end()) throw consistency_error("neighbor type outside the enumeration");
      q.at(i, it->second) = count;
    }
  }
  return q;
}

MatI64 evaluate(const QuotientMatrix& q, std::int64_t n) {
  if (n < 2LL * q.k)
    throw unsupported_range(
        "quotient evaluation requires n >= 2k; use the oracle for smaller n");
  const std::int64_t m = q.dim();
  MatI64 out(m, m);
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) out(i, j) = q.at(i, j)(n);
  return out;
}

std::string affine_token(const AffineInN& a) {
  if (a.slope == 0) return std::to_string(a.intercept);
  std::string out;
  if (a.slope != 1) out += std::to_string(a.slope);
  out += 'n';
  if (a.intercept == 0) return out;
  // n_i shorthand for a multiple of (n - i)
  if (a.intercept % a.slope == 0 && a.intercept < 0) {
    out += '_';
    out += std::to_string(-a.intercept / a.slope);
    return out;
  }
  out += (a.intercept > 0 ? '+' : '-');
  out += std::to_string(std::abs(a.intercept));
  return out;
}

std::string pretty(const QuotientMatrix& q) {
  const std::int64_t m = q.dim();
  std::vector<std::string> tokens(m * m);
  std::vector<size_t> width(m, 0);
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) {
      tokens[i * m + j] = affine_token(q.at(i, j));
      width[j] = std::max(width[j], tokens[i * m + j].size());
    }
  std::ostringstream os;
  for (std::int64_t i = 0; i < m; ++i) {
    os << q.order[i].str() << ":";
    for (std::int64_t j = 0; j < m; ++j) {
      const std::string& t = tokens[i * m + j];
      os << ' ' << std::string(width[j] - t.size(), ' ') << t;
    }
    os << '\n';
  }
  return os.str();
}

static nlohmann::json order_json(const std::vector<CycleType>& order) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : order) arr.push_back(t.str());
  return arr;
}

nlohmann::json to_json(const QuotientMatrix& q) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::int64_t i = 0; i < q.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::int64_t j = 0; j < q.dim(); ++j)
      row.push_back({{"slope", q.at(i, j).slope}, {"intercept", q.at(i, j).intercept}});
    rows.push_back(row);
  }
  return {{"k", q.k}, {"order", order_json(q.order)}, {"entries", rows}};
}

nlohmann::json to_json_evaluated(const QuotientMatrix& q, std::int64_t n) {
  return measured_to_json(q.k, n, q.order, evaluate(q, n));
}

nlohmann::json measured_to_json(int k, std::int64_t n, const std::vector<CycleType>& order,
                                const MatI64& entries) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < entries.cols(); ++j) row.push_back(entries(i, j));
    rows.push_back(row);
  }
  return {{"k", k}, {"n", n}, {"order", order_json(order)}, {"entries", rows}};
}

}  // namespace arng
