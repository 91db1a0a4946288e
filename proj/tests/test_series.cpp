#include <doctest.h>

#include "kaclim/bk.hpp"
#include "kaclim/series.hpp"
#include "support/fixtures.hpp"

using namespace kaclim;
using namespace kaclim::tests;

namespace {

// Brute-force convolution oracle: partitions of n into the given parts.
long partition_count(int n, const std::vector<int>& parts) {
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (int p : parts)
    for (int i = p; i <= n; ++i) ways[i] += ways[i - p];
  return ways[n];
}

}  // namespace

TEST_CASE("expansion of a pure product") {
  PoincareSeries s = PoincareSeries::one_over({2, 2, 2});
  std::vector<Int> c = s.expand(6);
  CHECK(c == std::vector<Int>{1, 0, 3, 0, 6, 0, 10});
}

TEST_CASE("subtraction cancels exactly") {
  PoincareSeries s = PoincareSeries::one_over({2});
  CHECK((s - s).is_zero());
  CHECK_FALSE((s - PoincareSeries::one_over({4})).is_zero());
}

TEST_CASE("shifted products expand as restricted partition counts") {
  PoincareSeries s = PoincareSeries::one_over({2, 4, 6}).shifted(4);
  std::vector<Int> c = s.expand(20);
  for (int m = 0; m <= 20; ++m) {
    long expected = (m >= 4 && m % 2 == 0) ? partition_count((m - 4) / 2, {1, 2, 3}) : 0;
    CHECK(c[m] == expected);
  }
  // Spot values at t^4, t^6, ..., t^20.
  std::vector<Int> spots;
  for (int m = 4; m <= 20; m += 2) spots.push_back(c[m]);
  CHECK(spots == std::vector<Int>{1, 1, 2, 3, 4, 5, 7, 8, 10});
}

TEST_CASE("canonical form cancels exact factors") {
  PoincareSeries s{Poly{{Int(1), Int(0), Int(0), Int(0), Int(-1)}}, {2, 4}};  // (1-t^4)/((1-t^2)(1-t^4))
  PoincareSeries c = s.canonical();
  CHECK(c.denom == std::vector<int>{2});
  CHECK(c.num.c == std::vector<Int>{Int(1)});
  CHECK(c.to_string() == "1 / ((1-t^2))");
}

TEST_CASE("exact division by one minus a power") {
  Poly p = Poly::one().times_one_minus(4).times_one_minus(2);
  auto q = p.divided_by_one_minus(4);
  REQUIRE(q.has_value());
  CHECK(*q == Poly::one().times_one_minus(2));
  CHECK_FALSE(Poly::one().times_one_minus(2).divided_by_one_minus(4).has_value());
}

TEST_CASE("euler series over a one-element poset is the element series") {
  FinitePoset single;
  single.leq = {{true}};
  PoincareSeries s = PoincareSeries::one_over({2, 4});
  PoincareSeries e = euler_characteristic_series(single, {s});
  CHECK((e - s).is_zero());
}

TEST_CASE("euler series of the affine example matches the chain census") {
  Gcm g = affine3();
  SphericalPoset poset = spherical_poset(g);
  std::vector<PoincareSeries> per;
  for (Subset s : poset.elements)
    per.push_back(invariant_series(coxeter_components(g, s), 4));
  PoincareSeries euler = euler_characteristic_series(poset.finite_poset(), per);

  PoincareSeries m = PoincareSeries::one_over({2, 2, 2, 2});
  PoincareSeries a = PoincareSeries::one_over({2, 2, 2, 4});
  PoincareSeries b = PoincareSeries::one_over({2, 2, 4, 6});
  PoincareSeries expected = m - (a + a + a) + (b + b + b);
  CHECK((euler - expected).is_zero());
}

TEST_CASE("one-spherical connecting series reproduces the closed form") {
  Gcm g = one_spherical3();
  BKReport report = bk_cohomology(g, Variant::Full, 20);
  // lim1 = 1 + 2/(1-t^2)^3 - 3/((1-t^2)^2(1-t^4)), from lim0 = 1 minus the
  // euler characteristic of the chain census.
  PoincareSeries one{Poly::one(), {}};
  PoincareSeries m = PoincareSeries::one_over({2, 2, 2});
  PoincareSeries a = PoincareSeries::one_over({2, 2, 4});
  PoincareSeries expected = one + (m + m) - (a + a + a);
  REQUIRE(report.lim1_series.has_value());
  CHECK((*report.lim1_series - expected).is_zero());
  std::vector<Int> coeffs = expected.expand(20);
  for (int m2 = 0; m2 <= 20; m2 += 2) CHECK(coeffs[m2] == report.lim_dim(1, m2));
}

TEST_CASE("greedy fit recovers pure products and rejects the rest") {
  std::vector<Int> c = PoincareSeries::one_over({2, 4, 6}).expand(20);
  auto fit = greedy_denominator_fit(c);
  REQUIRE(fit.has_value());
  CHECK(*fit == std::vector<int>{2, 4, 6});

  CHECK(greedy_denominator_fit({Int(1), Int(0), Int(0)})->empty());
  // 1 - t^2 cannot be a product of 1/(1 - t^k) factors.
  CHECK_FALSE(greedy_denominator_fit({Int(1), Int(0), Int(-1)}).has_value());
  CHECK_FALSE(greedy_denominator_fit({Int(0)}).has_value());
}

TEST_CASE("report invariants on the running examples") {
  BKReport aff = bk_cohomology(affine3(), Variant::Full, 20);
  CHECK(aff.h_dims[0] == 1);
  CHECK(aff.h_dims[1] == 0);
  CHECK(aff.torus_rank == 4);
  CHECK(aff.essential_sphericity == 2);

  BKReport two = bk_cohomology(two_spherical3(), Variant::Full, 20);
  CHECK(two.h_dims[0] == 1);
  CHECK(two.h_dims[1] == 0);
  CHECK(two.h_dims[3] == 0);  // indefinite indecomposable
  CHECK(two.lim2_vanishes);
  for (int m = 2; m <= 20; m += 2) CHECK(two.nilpotent_dims[m] == 0);

  CHECK_THROWS_AS(bk_cohomology(affine3(), Variant::Full, 100), Error);
}
