#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "dilog/qseries.hpp"

using namespace dilog;

namespace {

std::vector<Int> coeffs(const PowerSeries& s) { return s.c; }

std::vector<Int> from_longs(std::initializer_list<long> v) {
  std::vector<Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// independent oracle: count partitions of n into parts from the given set by
// explicit enumeration (nonincreasing parts), exponential but fine for small n
long count_partitions(int n, const std::vector<int>& parts, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int p : parts) {
    if (p > max_part || p > n) continue;
    total += count_partitions(n - p, parts, p);
  }
  return total;
}

}  // namespace

TEST_CASE("inverse pochhammer series") {
  CHECK(coeffs(inv_pochhammer_series(1, std::nullopt, 5)) == from_longs({1, 1, 2, 3, 5, 7}));
  CHECK(coeffs(inv_pochhammer_series(3, 1, 6)) == from_longs({1, 0, 0, 1, 0, 0, 1}));
  CHECK(coeffs(inv_pochhammer_series(1, 0, 4)) == from_longs({1, 0, 0, 0, 0}));
  CHECK_THROWS_AS(inv_pochhammer_series(0, std::nullopt, 4), Error);
}

TEST_CASE("nahm sum examples") {
  NahmSumSpec base{2, 3, 6, 0, 0, 0, 1, 3};
  CHECK(coeffs(nahm_sum_series(base, 6)) == from_longs({1, 1, 1, 2, 2, 2, 4}));

  NahmSumSpec shifted{2, 3, 6, 1, 3, 0, 1, 3};
  CHECK(coeffs(nahm_sum_series(shifted, 3)) == from_longs({1, 0, 1, 1}));

  CHECK(coeffs(nahm_sum_series(base, 0)) == from_longs({1}));

  NahmSumSpec with_c{2, 3, 6, 0, 0, 2, 1, 3};
  auto s = nahm_sum_series(with_c, 8);
  // a constant C is a pure shift
  auto t = nahm_sum_series(base, 8);
  for (int i = 0; i + 2 <= 8; ++i) CHECK(s.c[static_cast<size_t>(i + 2)] == t.c[static_cast<size_t>(i)]);
  CHECK(s.c[0] == 0);
}

TEST_CASE("nahm sum validation") {
  CHECK_THROWS_AS(nahm_sum_series(NahmSumSpec{1, 3, 6, 0, 0, 0, 1, 3}, 5), Error);  // odd diagonal
  CHECK_THROWS_AS(nahm_sum_series(NahmSumSpec{2, 4, 6, 0, 0, 0, 1, 3}, 5), Error);  // not PD
  CHECK_THROWS_AS(nahm_sum_series(NahmSumSpec{2, 3, 6, 0, 0, 0, 0, 3}, 5), Error);  // bad J
}

TEST_CASE("product side examples") {
  CHECK(coeffs(product_side_series(ProductSpec{9, {1, 3, 6, 9}}, 6)) ==
        from_longs({1, 1, 1, 2, 2, 2, 4}));
  CHECK(coeffs(product_side_series(ProductSpec{9, {3, 4, 5, 6}}, 2)) == from_longs({1, 0, 0}));
  CHECK(coeffs(product_side_series(ProductSpec{9, {}}, 3)) == from_longs({1, 0, 0, 0}));
  CHECK_THROWS_AS(product_side_series(ProductSpec{9, {0}}, 3), Error);
  CHECK_THROWS_AS(product_side_series(ProductSpec{9, {10}}, 3), Error);
  CHECK_THROWS_AS(product_side_series(ProductSpec{9, {3, 3}}, 3), Error);
}

TEST_CASE("product side against the enumeration oracle") {
  // parts congruent to 1,3,6,8 mod 9, enumerated explicitly
  std::vector<int> parts;
  for (int r : {1, 3, 6, 8})
    for (int p = r; p <= 30; p += 9) parts.push_back(p);
  std::sort(parts.begin(), parts.end());
  auto series = product_side_series(ProductSpec{9, {1, 3, 6, 8}}, 30);
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(series.c[static_cast<size_t>(n)] == count_partitions(n, parts, n == 0 ? 1 : n));
  }
  // the partition function itself
  auto pfun = product_side_series(ProductSpec{1, {1}}, 20);
  CHECK(pfun.c == inv_pochhammer_series(1, std::nullopt, 20).c);
}

TEST_CASE("sum-product identities through q^100") {
  for (int which : {1, 2, 3}) {
    auto rep = kursungoz_check(which, 100);
    CAPTURE(which);
    CHECK(rep.match);
    CHECK(!rep.first_mismatch);
  }
  auto r1 = kursungoz_check(1, 6);
  CHECK(r1.nahm_prefix == from_longs({1, 1, 1, 2, 2, 2, 4}));
  auto r3 = kursungoz_check(3, 6);
  CHECK(r3.nahm_prefix == from_longs({1, 0, 0, 1, 1, 1, 2}));
  CHECK(r3.product_prefix == from_longs({1, 0, 0, 1, 1, 1, 2}));
  auto r2 = kursungoz_check(2, 0);
  CHECK(r2.nahm_prefix == from_longs({1}));
  CHECK(r2.match);
}

TEST_CASE("the printed residue set for identity 1 fails at q^8") {
  auto rep = kursungoz_printed_variant(60);
  CHECK(!rep.match);
  REQUIRE(rep.first_mismatch.has_value());
  CHECK(*rep.first_mismatch == 8);
  // sum side counts 5, the printed product side only 4
  auto nahm = nahm_sum_series(NahmSumSpec{2, 3, 6, 0, 0, 0, 1, 3}, 8);
  auto prod = product_side_series(ProductSpec{9, {1, 3, 6, 9}}, 8);
  CHECK(nahm.c[8] == 5);
  CHECK(prod.c[8] == 4);
  // {1,3,6,8} is the unique matching 4-subset of residues mod 9
  auto reference = nahm_sum_series(NahmSumSpec{2, 3, 6, 0, 0, 0, 1, 3}, 40);
  int matching = 0;
  std::vector<int> subset;
  std::function<void(int, int)> rec = [&](int next, int chosen) {
    if (chosen == 4) {
      if (product_side_series(ProductSpec{9, subset}, 40).c == reference.c) ++matching;
      return;
    }
    if (next > 9) return;
    subset.push_back(next);
    rec(next + 1, chosen + 1);
    subset.pop_back();
    rec(next + 1, chosen);
  };
  rec(1, 0);
  CHECK(matching == 1);
}

TEST_CASE("prefix stability and coefficient positivity") {
  for (int which : {1, 2, 3}) {
    auto a = kursungoz_check(which, 50);
    auto b = kursungoz_check(which, 100);
    CHECK(a.match);
    CHECK(b.match);
  }
  auto s50 = nahm_sum_series(NahmSumSpec{2, 3, 6, 1, 3, 0, 1, 3}, 50);
  auto s100 = nahm_sum_series(NahmSumSpec{2, 3, 6, 1, 3, 0, 1, 3}, 100);
  for (int i = 0; i <= 50; ++i)
    CHECK(s50.c[static_cast<size_t>(i)] == s100.c[static_cast<size_t>(i)]);
  for (int i = 0; i <= 100; ++i) CHECK(s100.c[static_cast<size_t>(i)] >= 0);
}

TEST_CASE("series arithmetic") {
  auto a = PowerSeries::one(4);
  auto b = inv_pochhammer_series(1, 1, 4);  // 1/(1-q)
  auto prod = a * b;
  CHECK(prod.c == b.c);
  auto shifted = b.shifted(2);
  CHECK(shifted.c == from_longs({0, 0, 1, 1, 1}));
  CHECK_THROWS_AS(PowerSeries::zero(-1), Error);
}
