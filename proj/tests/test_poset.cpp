#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "kaclim/error.hpp"
#include "kaclim/poset.hpp"
#include "support/fixtures.hpp"

using namespace kaclim;
using namespace kaclim::tests;

namespace {

// Only the pair {1,2} is spherical; {3} stays an isolated maximal element.
Gcm single_pair3() { return make_gcm({{2, -1, -4}, {-1, 2, -4}, {-4, -4, 2}}); }

std::set<Subset> element_set(const SphericalPoset& p) {
  return {p.elements.begin(), p.elements.end()};
}

}  // namespace

TEST_CASE("spherical posets of the running examples") {
  SphericalPoset one = spherical_poset(one_spherical3());
  CHECK(element_set(one) == std::set<Subset>{0b000, 0b001, 0b010, 0b100});
  CHECK(one.sphericity == 1);
  CHECK(one.maximal == std::vector<Subset>{0b001, 0b010, 0b100});

  SphericalPoset two = spherical_poset(two_spherical3());
  CHECK(two.elements.size() == 7);
  CHECK(two.sphericity == 2);
  CHECK(two.maximal == std::vector<Subset>{0b011, 0b101, 0b110});

  SphericalPoset aff = spherical_poset(affine3());
  CHECK(aff.elements.size() == 7);
  CHECK_FALSE(aff.contains(0b111));

  CHECK_THROWS_AS(spherical_poset(affine3(), 2), Error);
}

TEST_CASE("posets are downward closed with all singletons present") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Gcm g = random_gcm(rng, 4);
    SphericalPoset p = spherical_poset(g);
    CHECK(p.contains(0));
    for (int i = 0; i < g.n; ++i) CHECK(p.contains(Subset(1) << i));
    for (Subset s : p.elements)
      for (int j : subset_indices(s)) CHECK(p.contains(s & ~(Subset(1) << j)));
    for (Subset s : p.elements)
      CHECK(classify_subset(g, s).kind == SubsetKind::Finite);
  }
}

TEST_CASE("core subposet closes the maximal elements under intersection") {
  SphericalPoset two = spherical_poset(two_spherical3());
  CorePoset core2 = core_subposet(two);
  CHECK(core2.elements == two.elements);
  CHECK(core2.essential_sphericity == 2);
  CHECK(core2.initial == 0);

  SphericalPoset one = spherical_poset(one_spherical3());
  CorePoset core1 = core_subposet(one);
  CHECK(core1.elements == one.elements);
  CHECK(core1.essential_sphericity == 1);

  SphericalPoset sp = spherical_poset(single_pair3());
  CHECK(sp.sphericity == 2);
  CorePoset core = core_subposet(sp);
  CHECK(core.elements == std::vector<Subset>{0b000, 0b011, 0b100});
  CHECK(core.essential_sphericity == 1);
  CHECK(core.initial == 0);
}

TEST_CASE("incidence graphs") {
  IncidenceGraph tri = incidence_graph(spherical_poset(two_spherical3()));
  CHECK(tri.vertices.size() == 3);
  CHECK(tri.edges.size() == 3);
  CHECK_FALSE(tri.over_core);

  IncidenceGraph aff = incidence_graph(spherical_poset(affine3()));
  CHECK(aff.vertices.size() == 3);
  CHECK(aff.edges.size() == 3);

  // A single spherical pair gives one edge and an isolated vertex.
  IncidenceGraph sp = incidence_graph(spherical_poset(single_pair3()));
  CHECK(sp.vertices.size() == 3);
  CHECK(sp.edges.size() == 1);

  IncidenceGraph one = incidence_graph(spherical_poset(one_spherical3()));
  CHECK(one.vertices.size() == 3);
  CHECK(one.edges.empty());
}

TEST_CASE("spanning forest of a triangle leaves one cycle") {
  IncidenceGraph tri = incidence_graph(spherical_poset(affine3()));
  ForestDecomposition forest = spanning_forest_decomposition(tri);
  CHECK(forest.forest_edges.size() == 2);
  REQUIRE(forest.unspanned.size() == 1);
  REQUIRE(forest.cycles.size() == 1);
  const auto& cycle = forest.cycles[0];
  CHECK(cycle.path_edges.size() == 2);       // cycle of length 3
  CHECK(cycle.subposet.size() == 7);         // initial + 3 vertices + 3 edges
}

TEST_CASE("a tree spans itself") {
  IncidenceGraph sp = incidence_graph(spherical_poset(single_pair3()));
  ForestDecomposition forest = spanning_forest_decomposition(sp);
  CHECK(forest.forest_edges.size() == 1);
  CHECK(forest.unspanned.empty());
  CHECK(forest.cycles.empty());
}

TEST_CASE("complete graph on four vertices yields three cycles of length 3") {
  IncidenceGraph g = incidence_structure(k4_poset());
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 6);
  ForestDecomposition forest = spanning_forest_decomposition(g);
  CHECK(forest.forest_edges.size() == 3);
  REQUIRE(forest.unspanned.size() == 3);
  for (const auto& cycle : forest.cycles) {
    CHECK(cycle.path_edges.size() == 2);  // both endpoints hang off the root
    CHECK(cycle.subposet.size() == 7);
  }
}

TEST_CASE("unspanned count is the fundamental cycle count") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Gcm g = random_gcm(rng, 4);
    SphericalPoset p = spherical_poset(g);
    if (p.sphericity > 2) continue;
    IncidenceGraph graph = incidence_graph(p);
    ForestDecomposition forest = spanning_forest_decomposition(graph);
    // components of the vertex set under the edges
    std::vector<int> parent(graph.vertices.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : graph.edges) parent[find(e.a)] = find(e.b);
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(int(i)));
    CHECK(long(forest.unspanned.size()) ==
          long(graph.edges.size()) - long(graph.vertices.size()) + long(roots.size()));
  }
}

TEST_CASE("finite type collapses to a one-element core") {
  Gcm a3 = make_gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  SphericalPoset p = spherical_poset(a3);
  CHECK(p.sphericity == 3);
  CorePoset core = core_subposet(p);
  CHECK(core.elements == std::vector<Subset>{0b111});
  CHECK(core.essential_sphericity == 0);
  IncidenceGraph g = incidence_graph(p);
  CHECK(g.over_core);
  CHECK(g.vertices.empty());
  CHECK(g.edges.empty());
}

TEST_CASE("a 3-spherical matrix can still have a two-level core") {
  // Maximal spherical subsets {1,2,3}, {1,2,4}, {1,3,4}; the triangle {2,3,4}
  // is affine, so the whole set is not spherical.
  Gcm g = make_gcm({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, -1}, {0, -1, -1, 2}});
  SphericalPoset p = spherical_poset(g);
  CHECK(p.sphericity == 3);
  CHECK(p.maximal == std::vector<Subset>{0b0111, 0b1011, 0b1101});
  CorePoset core = core_subposet(p);
  CHECK(core.initial == 0b0001);
  CHECK(core.essential_sphericity == 2);
  IncidenceGraph graph = incidence_graph(p);
  CHECK(graph.over_core);
  CHECK(graph.vertices.size() == 3);  // {1,2}, {1,3}, {1,4}
  CHECK(graph.edges.size() == 3);     // the three maximal triples
  ForestDecomposition forest = spanning_forest_decomposition(graph);
  CHECK(forest.unspanned.size() == 1);
}

TEST_CASE("non-two-level cores are rejected") {
  // The affine 4-cycle: every triple is spherical, the core is the whole
  // proper part of the cube and has chains of length 3.
  Gcm cyc = make_gcm({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}});
  SphericalPoset p = spherical_poset(cyc);
  CHECK(p.sphericity == 3);
  CHECK(core_subposet(p).essential_sphericity == 3);
  try {
    incidence_graph(p);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEssentially2Spherical);
  }
}
