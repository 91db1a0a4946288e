#ifndef KACLIM_POSET_HPP
#define KACLIM_POSET_HPP

#include <vector>

#include "kaclim/gcm.hpp"

namespace kaclim {

/// Finite poset on elements 0..size-1. The element order must be a linear
/// extension (i < j whenever element i is strictly below element j).
struct FinitePoset {
  std::vector<std::vector<bool>> leq;  // leq[i][j] <=> i <= j

  int size() const { return int(leq.size()); }
  bool less(int i, int j) const { return i != j && leq[i][j]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Longest chain, counted in edges.
  int max_chain_length() const;
  /// chains[p] lists the strictly increasing (p+1)-tuples, lexicographically.
  std::vector<std::vector<std::vector<int>>> chains() const;
  /// Index of the unique minimum, or -1 if there is none.
  int initial_element() const;
  /// Restriction to a subset of elements (given as sorted indices).
  FinitePoset restrict(const std::vector<int>& elems) const;
};

/// Compares index subsets by cardinality, then by their sorted index arrays.
bool subset_before(Subset a, Subset b);
/// Pure lexicographic order on sorted index arrays.
bool subset_lex_before(Subset a, Subset b);

/// The downward-closed family of subsets with finite Weyl group, ordered by
/// inclusion.
struct SphericalPoset {
  int n = 0;
  std::vector<Subset> elements;  // sorted by subset_before; elements[0] = 0
  std::vector<Subset> maximal;
  int sphericity = 0;  // largest cardinality among elements

  int index_of(Subset s) const;  // -1 if absent
  bool contains(Subset s) const { return index_of(s) >= 0; }
  FinitePoset finite_poset() const;
};

SphericalPoset spherical_poset(const Gcm& gcm, int size_cap = 10);

/// Closure of the maximal spherical subsets under intersection.
struct CorePoset {
  std::vector<Subset> elements;  // sorted by subset_before
  Subset initial = 0;            // common intersection of all maximal elements
  std::vector<Subset> maximal;
  int essential_sphericity = 0;  // longest chain, in edges

  int index_of(Subset s) const;
  FinitePoset finite_poset() const;
};

CorePoset core_subposet(const SphericalPoset& poset);

/// Two-level incidence structure: vertices are the minimal non-initial
/// elements, edges the remaining ones, each covering exactly two vertices.
struct IncidenceGraph {
  FinitePoset poset;               // the poset the graph lives over
  std::vector<Subset> labels;      // bitmask labels per poset element (empty if abstract)
  int initial = 0;                 // poset index
  std::vector<int> vertices;       // poset indices, canonically ordered
  struct Edge {
    int element;  // poset index
    int a, b;     // endpoints, as positions in `vertices`
  };
  std::vector<Edge> edges;
  bool over_core = false;  // built over the core rather than the full poset
};

/// Builds the graph over the poset itself when it is 2-spherical, otherwise
/// over the core. Throws NotEssentially2Spherical when neither works.
IncidenceGraph incidence_graph(const SphericalPoset& poset);

/// Same construction over an arbitrary finite poset with an initial element.
IncidenceGraph incidence_structure(FinitePoset poset, std::vector<Subset> labels = {});

/// Edge-maximal spanning forest plus, for each unspanned edge, the forest
/// path between its endpoints and the resulting cycle subposet.
struct ForestDecomposition {
  std::vector<int> forest_edges;  // edge ids
  std::vector<int> unspanned;     // edge ids
  struct Cycle {
    int edge;                        // unspanned edge id
    std::vector<int> path_vertices;  // vertex positions, from one endpoint to the other
    std::vector<int> path_edges;     // forest edge ids along the path
    std::vector<int> subposet;       // poset element indices of the cycle subposet
  };
  std::vector<Cycle> cycles;
};

/// Deterministic: BFS from the canonically smallest vertex of each component,
/// visiting neighbors in canonical order.
ForestDecomposition spanning_forest_decomposition(const IncidenceGraph& graph);

}  // namespace kaclim

#endif
