#include <doctest.h>

#include "kaclim/error.hpp"
#include "kaclim/invariants.hpp"
#include "kaclim/weyl.hpp"
#include "support/fixtures.hpp"

using namespace kaclim;
using namespace kaclim::tests;

TEST_CASE("derived generators are the dual of the coroot action") {
  Gcm a2 = make_gcm({{2, -1}, {-1, 2}});
  Realization real = realization(a2, Variant::Derived);
  REQUIRE(real.rank == 2);
  // s1 on the coroot basis has columns (-e1, e1 + e2); the action on the
  // degree-2 part is its transpose.
  Mat coroot_action = Mat::from_rows({{-1, 1}, {0, 1}});
  CHECK(real.generators[0] == coroot_action.transpose());
  CHECK((real.generators[0] * real.generators[0]).is_identity());
  CHECK(matrix_order(real.generators[0] * real.generators[1], 10) == 3);
}

TEST_CASE("torus ranks per variant") {
  CHECK(realization(affine3(), Variant::Full).rank == 4);
  CHECK(realization(affine3(), Variant::Derived).rank == 3);
  // Nonsingular matrices coincide across variants.
  Realization full = realization(two_spherical3(), Variant::Full);
  Realization derived = realization(two_spherical3(), Variant::Derived);
  CHECK(full.rank == derived.rank);
  for (int i = 0; i < 3; ++i) CHECK(full.generators[i] == derived.generators[i]);
  CHECK(realization(make_gcm({{2}}), Variant::Full).rank == 1);
}

TEST_CASE("generators are reflections in every variant") {
  for (const Gcm& g : {affine3(), one_spherical3(), two_spherical3()})
    for (Variant v : {Variant::Full, Variant::Derived})
      for (const Mat& s : realization(g, v).generators) CHECK(is_reflection(s));
}

TEST_CASE("pairwise products have the Coxeter orders") {
  for (const Gcm& g : {affine3(), two_spherical3()}) {
    auto labels = coxeter_labels(g);
    for (Variant v : {Variant::Full, Variant::Derived}) {
      Realization real = realization(g, v);
      for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
          if (labels[i][j] != kInfiniteBond)
            CHECK(matrix_order(real.generators[i] * real.generators[j], 64) == labels[i][j]);
    }
  }
}

TEST_CASE("type recognition on the running examples") {
  CoxeterTypeReport g2 = coxeter_components(two_spherical3(), 0b110);
  REQUIRE(g2.components.size() == 1);
  CHECK(g2.components[0].label == "I2(6)");
  CHECK(g2.degrees == std::vector<int>{2, 6});
  CHECK(g2.order == 12);

  CoxeterTypeReport a1 = coxeter_components(two_spherical3(), 0b001);
  CHECK(a1.components[0].label == "A1");
  CHECK(a1.degrees == std::vector<int>{2});
  CHECK(a1.order == 2);

  CoxeterTypeReport a2 = coxeter_components(affine3(), 0b011);
  CHECK(a2.components[0].label == "A2");
  CHECK(a2.degrees == std::vector<int>{2, 3});
  CHECK(a2.order == 6);

  CHECK(coxeter_components(affine3(), 0).order == 1);
  CHECK_THROWS_AS(coxeter_components(affine3(), 0b111), Error);
}

TEST_CASE("type recognition across the finite families") {
  struct Case {
    std::vector<std::vector<long>> matrix;
    std::string label;
    unsigned long long order;
  };
  std::vector<Case> cases{
      {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, "A3", 24},
      {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, "B3", 48},
      {{{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}}, "D4", 192},
      {{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}, "F4", 1152},
      {{{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1},
        {0, 0, 0, -1, 2}},
       "A5", 720},
  };
  for (const Case& c : cases) {
    Gcm g = make_gcm(c.matrix);
    Subset all = (Subset(1) << g.n) - 1;
    CoxeterTypeReport report = coxeter_components(g, all);
    REQUIRE(report.components.size() == 1);
    CHECK(report.components[0].label == c.label);
    CHECK(report.order == c.order);
    // The order is also the size of the generated matrix group.
    if (c.order <= 200) {
      Realization real = realization(g, Variant::Derived);
      CHECK(group_order(real.generators, long(c.order) + 1) == long(c.order));
    }
  }
  // E6 via the branch (1,2,2).
  Gcm e6 = make_gcm({{2, -1, 0, 0, 0, 0},
                     {-1, 2, -1, 0, 0, 0},
                     {0, -1, 2, -1, 0, -1},
                     {0, 0, -1, 2, -1, 0},
                     {0, 0, 0, -1, 2, 0},
                     {0, 0, -1, 0, 0, 2}});
  CoxeterTypeReport report = coxeter_components(e6, 0b111111);
  CHECK(report.components[0].label == "E6");
  CHECK(report.order == 51840);
}

TEST_CASE("invariant series of the running examples") {
  Gcm two = two_spherical3();
  PoincareSeries pair = invariant_series(coxeter_components(two, 0b110), 3);
  CHECK(pair.denom == std::vector<int>{2, 4, 12});
  PoincareSeries empty = invariant_series(coxeter_components(two, 0), 3);
  CHECK(empty.denom == std::vector<int>{2, 2, 2});
  PoincareSeries single = invariant_series(coxeter_components(two, 0b001), 3);
  CHECK(single.denom == std::vector<int>{2, 2, 4});

  // Affine full torus: one extra free degree-2 generator per corank.
  PoincareSeries aff_pair = invariant_series(coxeter_components(affine3(), 0b011), 4);
  CHECK(aff_pair.denom == std::vector<int>{2, 2, 4, 6});
}

TEST_CASE("fixed-space dimensions match the invariant series coefficients") {
  // One spot check per variant; the full sweep runs in the acceptance suite.
  Gcm g = affine3();
  for (Variant v : {Variant::Full, Variant::Derived}) {
    Realization real = realization(g, v);
    for (Subset s : spherical_poset(g).elements) {
      PoincareSeries series = invariant_series(coxeter_components(g, s), real.rank);
      std::vector<Int> coeffs = series.expand(12);
      for (int d = 0; d <= 6; ++d) {
        std::vector<Mat> gens;
        for (int i : subset_indices(s)) gens.push_back(real.generators[i]);
        CHECK(Int(fixed_subspace(gens, PolySpace::make(real.rank, d)).dim()) == coeffs[2 * d]);
      }
    }
  }
}
