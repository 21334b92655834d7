#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "arng/cycle_type.hpp"
#include "arng/kperm.hpp"
#include "arng/numbers.hpp"
#include "arng/oracle.hpp"

using namespace arng;

TEST_CASE("count_c reproduces the two-kind partition counts") {
  const std::int64_t expected[] = {1, 2, 5, 10, 20, 36, 65, 110, 185, 300};
  for (int k = 0; k <= 9; ++k) CHECK(count_c(k) == expected[k]);
}

TEST_CASE("enumeration matches count_c") {
  for (int k = 1; k <= 10; ++k)
    CHECK(static_cast<std::int64_t>(enumerate_types(k).size()) == count_c(k));
}

TEST_CASE("small enumerations") {
  auto strs = [](const std::vector<CycleType>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(t.str());
    return out;
  };
  CHECK(strs(enumerate_types(1)) == std::set<std::string>{"1", "1'"});
  CHECK(strs(enumerate_types(2)) ==
        std::set<std::string>{"1 1", "2", "1 1'", "1' 1'", "2'"});
  CHECK(strs(enumerate_types(3)) ==
        std::set<std::string>{"1 1 1", "1 2", "3", "1 1 1'", "1 2'", "3'", "2 1'",
                              "1 1' 1'", "1' 2'", "1' 1' 1'"});
}

TEST_CASE("paper ordering fixtures") {
  auto t3 = enumerate_types(3, TypeOrdering::paper);
  REQUIRE(t3.size() == 10);
  CHECK(t3.front().str() == "1 1 1");
  CHECK(t3[5].str() == "1 1' 1'");
  CHECK(t3.back().str() == "3'");

  auto t4 = enumerate_types(4, TypeOrdering::paper);
  REQUIRE(t4.size() == 20);
  CHECK(t4.front().str() == "1 1 1 1");
  CHECK(t4[4].str() == "4");
  CHECK(t4[12].str() == "1 1' 1' 1'");
  CHECK(t4.back().str() == "4'");

  CHECK_THROWS_AS(enumerate_types(5, TypeOrdering::paper), unsupported_range);
}

TEST_CASE("canonical order is deterministic and starts with the k-cycle") {
  auto ts = enumerate_types(4);
  CHECK(ts.front().str() == "4");
  CHECK(ts.back().str() == "1' 1' 1' 1'");
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    CHECK(ts[i] < ts[i + 1]);
    CHECK(ts[i].num_paths() <= ts[i + 1].num_paths());
  }
}

TEST_CASE("cell sizes") {
  CycleType path3 = CycleType::parse("3'");
  CHECK(cell_size(path3, 5) == 12);   // 6(n-3)
  CHECK(cell_size(path3, 6) == 18);

  CycleType identity = CycleType::parse("1 1 1 1");
  for (int n = 4; n <= 12; ++n) CHECK(cell_size(identity, n) == 1);

  CycleType three_paths = CycleType::parse("1' 1' 1'");
  CHECK(cell_size(three_paths, 6) == 6);  // (n-3)(n-4)(n-5)
  CHECK(cell_size(three_paths, 5) == 0);  // s = 3 > n - k
  CHECK(cell_size(three_paths, 4) == 0);

  CHECK_THROWS_AS(cell_size(path3, 2), input_error);
}

TEST_CASE("cell size census against exhaustive enumeration") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = k; n <= 6; ++n) {
      ArrangementGraph g = build_arrangement_graph(n, k);
      std::map<std::string, std::int64_t> census;
      for (const auto& image : g.vertices)
        census[cycle_type(KPermutation(n, image)).str()]++;
      for (const auto& t : enumerate_types(k)) {
        auto it = census.find(t.str());
        const std::int64_t measured = (it == census.end()) ? 0 : it->second;
        CHECK(cell_size(t, n) == measured);
      }
    }
  }
}

TEST_CASE("partition sums") {
  CHECK(partition_sum_check(5, 3));
  CHECK(partition_sum_check(4, 4));
  CHECK(partition_sum_check(10, 7));
  for (int k = 1; k <= 7; ++k)
    for (int n = k; n <= 20; ++n) CHECK(partition_sum_check(n, k));
}

TEST_CASE("cell_size monotone in n, zero exactly below n = k + s") {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& t : enumerate_types(k)) {
      std::int64_t prev = 0;
      for (int n = k; n <= 14; ++n) {
        std::int64_t size = cell_size(t, n);
        CHECK(size >= prev);
        CHECK((size == 0) == (n - k < t.num_paths()));
        prev = size;
      }
    }
  }
}

TEST_CASE("string round trip") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& t : enumerate_types(k)) CHECK(CycleType::parse(t.str()) == t);
  CHECK(CycleType::parse("1 1 2'").str() == "1 1 2'");
  CHECK_THROWS_AS(CycleType::parse("0 2"), input_error);
  CHECK_THROWS_AS(CycleType::parse("x"), input_error);
}
