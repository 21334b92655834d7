#include "arng/kperm.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "arng/cycle_type.hpp"

namespace arng {

KPermutation::KPermutation(int n_, std::vector<int> image_)
    : n(n_), k(static_cast<int>(image_.size())), image(std::move(image_)) {
  validate();
}

KPermutation KPermutation::parse(std::string_view literal, int n) {
  std::vector<int> image;
  const char* p = literal.data();
  const char* end = p + literal.size();
  while (p != end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p)
      throw input_error("cannot parse k-permutation literal: " + std::string(literal));
    image.push_back(value);
    p = next;
    if (p != end) {
      if (*p != ',') throw input_error("expected ',' in k-permutation literal");
      ++p;
    }
  }
  if (image.empty()) throw input_error("empty k-permutation literal");
  return KPermutation(n, std::move(image));
}

void KPermutation::validate() const {
  if (k < 1 || k > n) throw input_error("k-permutation requires 1 <= k <= n");
  if (static_cast<int>(image.size()) != k) throw input_error("image length differs from k");
  std::set<int> seen;
  for (int v : image) {
    if (v < 1 || v > n) throw input_error("image value out of [n]");
    if (!seen.insert(v).second) throw input_error("image values must be distinct");
  }
}

CyclicDecomposition decompose(const KPermutation& p) {
  const int k = p.k;
  std::vector<char> in_image(k + 1, 0);
  for (int v : p.image)
    if (v <= k) in_image[v] = 1;

  CyclicDecomposition d;
  std::vector<char> done(k + 1, 0);

  // Paths start at elements of [k] with no preimage inside [k].
  for (int start = 1; start <= k; ++start) {
    if (in_image[start]) continue;
    std::vector<int> seq{start};
    done[start] = 1;
    int cur = start;
    while (true) {
      int next = p.image[cur - 1];
      seq.push_back(next);
      if (next > k) break;  // head reached
      done[next] = 1;
      cur = next;
    }
    d.paths.push_back(std::move(seq));
  }

  // Everything left lies on cycles inside [k].
  for (int start = 1; start <= k; ++start) {
    if (done[start]) continue;
    std::vector<int> seq;
    int cur = start;
    do {
      seq.push_back(cur);
      done[cur] = 1;
      cur = p.image[cur - 1];
    } while (cur != start);
    // rotate so the minimum element comes first
    auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    d.cycles.push_back(std::move(seq));
  }

  auto by_first = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.front() < b.front();
  };
  std::sort(d.cycles.begin(), d.cycles.end(), by_first);
  std::sort(d.paths.begin(), d.paths.end(), by_first);
  return d;
}

KPermutation recompose(const CyclicDecomposition& d, int n, int k) {
  if (k < 1 || k > n) throw input_error("recompose requires 1 <= k <= n");
  std::vector<int> image(k, 0);
  std::set<int> covered;

  auto cover = [&](int u) {
    if (u < 1 || u > k) throw input_error("decomposition element outside [k]");
    if (!covered.insert(u).second) throw input_error("element repeats in decomposition");
  };

  for (const auto& c : d.cycles) {
    if (c.empty()) throw input_error("empty cycle");
    for (size_t i = 0; i < c.size(); ++i) {
      cover(c[i]);
      image[c[i] - 1] = c[(i + 1) % c.size()];
    }
  }
  std::set<int> heads;
  for (const auto& q : d.paths) {
    if (q.size() < 2) throw input_error("path needs at least one arc");
    int head = q.back();
    if (head <= k || head > n) throw input_error("path head must lie in [n] outside [k]");
    if (!heads.insert(head).second) throw input_error("path heads must be distinct");
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      cover(q[i]);
      image[q[i] - 1] = q[i + 1];
    }
  }
  if (static_cast<int>(covered.size()) != k)
    throw input_error("decomposition does not cover [k]");
  return KPermutation(n, std::move(image));
}

CycleType cycle_type(const KPermutation& p) {
  CyclicDecomposition d = decompose(p);
  CycleType t;
  t.k = p.k;
  for (const auto& c : d.cycles) t.cycle_mults[static_cast<int>(c.size())]++;
  for (const auto& q : d.paths) t.path_mults[static_cast<int>(q.size()) - 1]++;
  return t;
}

BasicGraph basic_graph(const KPermutation& p) {
  BasicGraph g;
  std::set<int> verts;
  for (int u = 1; u <= p.k; ++u) {
    verts.insert(u);
    verts.insert(p.image[u - 1]);
    g.arcs.emplace_back(u, p.image[u - 1]);
  }
  g.vertices.assign(verts.begin(), verts.end());
  return g;
}

std::vector<std::pair<int, bool>> component_signature(const CyclicDecomposition& d) {
  std::vector<std::pair<int, bool>> sig;
  for (const auto& c : d.cycles) sig.emplace_back(static_cast<int>(c.size()), true);
  for (const auto& q : d.paths) sig.emplace_back(static_cast<int>(q.size()) - 1, false);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::string to_string(const CyclicDecomposition& d) {
  std::string out;
  auto emit = [&](const std::vector<int>& seq, char close) {
    out += '(';
    for (size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(seq[i]);
    }
    out += close;
  };
  for (const auto& c : d.cycles) emit(c, ')');
  for (const auto& q : d.paths) emit(q, ']');
  return out;
}

}  // namespace arng
