#include "arng/cycle_type.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "arng/numbers.hpp"

namespace arng {

int CycleType::num_paths() const {
  int s = 0;
  for (auto [len, b] : path_mults) s += b;
  return s;
}

int CycleType::num_cycles() const {
  int c = 0;
  for (auto [len, a] : cycle_mults) c += a;
  return c;
}

static std::vector<int> parts_desc(const std::map<int, int>& mults) {
  std::vector<int> parts;
  for (auto it = mults.rbegin(); it != mults.rend(); ++it)
    parts.insert(parts.end(), it->second, it->first);
  return parts;
}

std::vector<int> CycleType::cycle_parts_desc() const { return parts_desc(cycle_mults); }
std::vector<int> CycleType::path_parts_desc() const { return parts_desc(path_mults); }

static void bump(std::map<int, int>& mults, int len, int delta) {
  if (len == 0) return;
  auto it = mults.find(len);
  int cur = (it == mults.end()) ? 0 : it->second;
  cur += delta;
  if (cur < 0) throw input_error("part multiplicity underflow");
  if (cur == 0) {
    if (it != mults.end()) mults.erase(it);
  } else {
    mults[len] = cur;
  }
}

CycleType CycleType::with_cycle_added(int len) const {
  CycleType t = *this;
  bump(t.cycle_mults, len, +1);
  t.k += len;
  return t;
}
CycleType CycleType::with_cycle_removed(int len) const {
  CycleType t = *this;
  bump(t.cycle_mults, len, -1);
  t.k -= len;
  return t;
}
CycleType CycleType::with_path_added(int len) const {
  CycleType t = *this;
  bump(t.path_mults, len, +1);
  t.k += len;
  return t;
}
CycleType CycleType::with_path_removed(int len) const {
  CycleType t = *this;
  bump(t.path_mults, len, -1);
  t.k -= len;
  return t;
}

std::string CycleType::str() const {
  std::string out;
  for (auto [len, a] : cycle_mults)
    for (int i = 0; i < a; ++i) {
      if (!out.empty()) out += ' ';
      out += std::to_string(len);
    }
  for (auto [len, b] : path_mults)
    for (int i = 0; i < b; ++i) {
      if (!out.empty()) out += ' ';
      out += std::to_string(len) + "'";
    }
  return out;
}

CycleType CycleType::parse(std::string_view text) {
  CycleType t;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p != end) {
    while (p != end && *p == ' ') ++p;
    if (p == end) break;
    int len = 0;
    auto [next, ec] = std::from_chars(p, end, len);
    if (ec != std::errc{} || next == p || len < 1)
      throw input_error("cannot parse cycle type: " + std::string(text));
    p = next;
    if (p != end && *p == '\'') {
      bump(t.path_mults, len, +1);
      ++p;
    } else {
      bump(t.cycle_mults, len, +1);
    }
    t.k += len;
  }
  t.validate();
  return t;
}

void CycleType::validate() const {
  int weight = 0;
  for (auto [len, a] : cycle_mults) {
    if (len < 1 || a < 1) throw input_error("invalid cycle part");
    weight += len * a;
  }
  for (auto [len, b] : path_mults) {
    if (len < 1 || b < 1) throw input_error("invalid path part");
    weight += len * b;
  }
  if (weight != k || k < 1) throw input_error("cycle type weight mismatch");
}

bool CycleType::operator==(const CycleType& o) const {
  return k == o.k && cycle_mults == o.cycle_mults && path_mults == o.path_mults;
}

bool CycleType::operator<(const CycleType& o) const {
  int sa = num_paths(), sb = o.num_paths();
  if (sa != sb) return sa < sb;
  auto ca = cycle_parts_desc(), cb = o.cycle_parts_desc();
  if (ca != cb) return std::lexicographical_compare(cb.begin(), cb.end(), ca.begin(), ca.end());
  auto pa = path_parts_desc(), pb = o.path_parts_desc();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

// All partitions of w, each as a descending part list.
static std::vector<std::vector<int>> partitions_of(int w) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, w, w);
  return out;
}

static CycleType make_type(const std::vector<int>& cycles, const std::vector<int>& paths, int k) {
  CycleType t;
  t.k = k;
  for (int len : cycles) t.cycle_mults[len]++;
  for (int len : paths) t.path_mults[len]++;
  return t;
}

// The layouts used by the printed quotient matrices for k = 3 and k = 4.
static const std::array<const char*, 10> kPaperOrder3 = {
    "1 1 1", "1 2", "3", "1 1 1'", "2 1'", "1 1' 1'", "1 2'", "1' 1' 1'", "1' 2'", "3'"};
static const std::array<const char*, 20> kPaperOrder4 = {
    "1 1 1 1", "1 1 2", "2 2",      "1 3",      "4",
    "1 1 1 1'", "1 2 1'", "3 1'",   "1 1 1' 1'", "2 1' 1'",
    "1 1 2'",  "2 2'",   "1 1' 1' 1'", "1 1' 2'", "1 3'",
    "1' 1' 1' 1'", "1' 1' 2'", "2' 2'", "1' 3'", "4'"};

std::vector<CycleType> enumerate_types(int k, TypeOrdering ordering) {
  if (k < 1) throw input_error("enumerate_types requires k >= 1");
  if (ordering == TypeOrdering::paper) {
    std::vector<CycleType> out;
    if (k == 3)
      for (const char* s : kPaperOrder3) out.push_back(CycleType::parse(s));
    else if (k == 4)
      for (const char* s : kPaperOrder4) out.push_back(CycleType::parse(s));
    else
      throw unsupported_range("paper ordering is defined for k = 3 and k = 4 only");
    return out;
  }
  std::vector<CycleType> out;
  for (int wc = k; wc >= 0; --wc) {
    auto cycle_parts = partitions_of(wc);
    auto path_parts = partitions_of(k - wc);
    for (const auto& c : cycle_parts)
      for (const auto& p : path_parts) out.push_back(make_type(c, p, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_c(int k) {
  if (k < 0) throw input_error("count_c requires k >= 0");
  if (k > 60) throw unsupported_range("count_c supports k <= 60");
  // p(i) by dynamic programming over part sizes.
  std::vector<std::int64_t> p(k + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int w = part; w <= k; ++w) p[w] += p[w - part];
  std::int64_t c = 0;
  for (int i = 0; i <= k; ++i) c += p[i] * p[k - i];
  return c;
}

std::int64_t cell_size(const CycleType& t, std::int64_t n) {
  t.validate();
  if (n < t.k) throw input_error("cell_size requires n >= k");
  BigInt count = 1;
  for (int i = 2; i <= t.k; ++i) count *= i;  // k!
  BigInt div = 1;
  for (auto [len, a] : t.cycle_mults) {
    for (int i = 0; i < a; ++i) div *= len;
    for (int i = 2; i <= a; ++i) div *= i;
  }
  for (auto [len, b] : t.path_mults)
    for (int i = 2; i <= b; ++i) div *= i;
  count /= div;  // exact
  count *= falling_factorial(BigInt(n - t.k), t.num_paths());
  return to_i64(count);
}

bool partition_sum_check(std::int64_t n, int k) {
  if (k < 1 || n < k) throw input_error("partition_sum_check requires n >= k >= 1");
  BigInt total = 0;
  for (const auto& t : enumerate_types(k)) total += cell_size(t, n);
  return total == falling_factorial(BigInt(n), k);
}

}  // namespace arng
