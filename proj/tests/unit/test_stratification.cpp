#include <doctest.h>

#include <algorithm>

#include "douady/goettsche.hpp"
#include "douady/stratification.hpp"
#include "douady/surface.hpp"
#include "oracles.hpp"

using namespace douady;

namespace {

Partition P(std::vector<int> parts) { return Partition::from_parts(std::move(parts)); }

// rows[h] by brute enumeration of tuples and their total length
std::vector<std::int64_t> brute_rows(const Partition& nu) {
  const int n = nu.weight();
  std::vector<std::int64_t> rows(static_cast<std::size_t>(n), 0);
  for (const auto& t : oracle::tuples(nu.parts())) {
    int len = 0;
    for (const auto& b : t) len += static_cast<int>(b.size());
    ++rows[static_cast<std::size_t>(n - len)];
  }
  return rows;
}

}  // namespace

TEST_CASE("support strata examples") {
  for (int n = 1; n <= 6; ++n) CHECK(support_strata(n, 0) == enumerate(n));
  const auto s = support_strata(3, 2);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == P({3}));
  for (int n = 1; n <= 6; ++n) {
    CHECK(support_strata(n, n).empty());
    CHECK(support_strata(n, n + 3).empty());
  }
}

TEST_CASE("support strata shrink as h grows") {
  for (int n = 1; n <= 9; ++n) {
    for (int h = 0; h < n; ++h) {
      const auto big = support_strata(n, h);
      for (const auto& a : support_strata(n, h + 1)) {
        CHECK(std::find(big.begin(), big.end(), a) != big.end());
      }
      for (const auto& a : big) CHECK(a.length() <= n - h);
    }
  }
}

TEST_CASE("stalk tables") {
  CHECK(stalk_table(P({1, 1, 1, 1})).rows == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(stalk_table(P({2, 1})).rows == std::vector<std::int64_t>{1, 1, 0});
  CHECK(stalk_table(P({2, 1})).poincare().str() == "1 + t^2");
  const auto t = stalk_table(P({3}));
  CHECK(t.at(-1) == 0);
  CHECK(t.at(3) == 0);
  for (int n = 1; n <= 8; ++n) {
    const auto single = stalk_table(P({n}));
    for (int h = 0; h < n; ++h) CHECK(single.at(h) == count_by_length(n, n - h));
  }
}

TEST_CASE("stalk tables match brute enumeration and the support description for n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    const auto all = enumerate(n);
    for (const auto& nu : all) {
      const auto table = stalk_table(nu);
      CHECK(table.nu == nu);
      CHECK(table.rows == brute_rows(nu));
      CHECK(table.at(0) == 1);
      for (int h = 0; h < n; ++h) {
        if (table.at(h) == 0) continue;
        bool reached = false;
        for (const auto& a : all) reached |= a.length() == n - h && stratum_geq(a, nu);
        CHECK(reached);
      }
    }
  }
}

TEST_CASE("local fiber check") {
  CHECK(local_fiber_check(P({2, 1})));
  CHECK(local_fiber_check(P({1, 1, 1, 1, 1})));
  for (int n = 1; n <= 10; ++n) {
    CHECK(local_fiber_check(P({n})));
    for (const auto& nu : enumerate(n)) {
      CHECK(local_fiber_check(nu));
      CoeffPoly prod(1);
      for (int part : nu.parts()) prod = prod * poincare_punctual(part);
      CHECK(stalk_table(nu).poincare() == prod);
    }
  }
}

TEST_CASE("global degeneration") {
  for (const auto& s : presets::all()) CHECK(global_degeneration_check(s, 1));
  CHECK(global_degeneration_check(presets::p2(), 2));
  for (int n = 0; n <= 8; ++n) CHECK(global_degeneration_check(presets::delta(), n));
  for (const auto& s : presets::all()) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(global_degeneration_check(s, n));
      CHECK(leray_regrouped_poincare(s, n) == decomposition_poincare(s, n));
    }
  }
  // regrouped side by hand for P2, n = 2
  CHECK(leray_regrouped_poincare(presets::p2(), 2).str() == "1 + 2t^2 + 3t^4 + 2t^6 + t^8");
}
