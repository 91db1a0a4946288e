#ifndef KACLIM_HOLIM_HPP
#define KACLIM_HOLIM_HPP

#include <vector>

#include "kaclim/invariants.hpp"
#include "kaclim/poset.hpp"
#include "kaclim/weyl.hpp"

namespace kaclim {

/// One polynomial degree of a diagram of subspaces over a poset, contravariant
/// in the order: I <= J implies spaces[J] <= spaces[I].
struct DiagramSlice {
  FinitePoset poset;
  int ambient = 0;
  int degree = 0;
  std::vector<Subspace> spaces;  // aligned with poset elements
};

/// Fixed subspaces of the subset Weyl groups in one polynomial degree.
DiagramSlice build_diagram(const Realization& realization, const std::vector<Subset>& elements,
                           const FinitePoset& poset, int degree);

/// Normalized cochain complex on strict chains, valued at chain minima.
struct CochainComplex {
  std::vector<long> dims;              // dim C^p
  std::vector<SparseMat> differential;  // differential[p]: C^p -> C^{p+1}
};

CochainComplex build_cochain_complex(const DiagramSlice& slice);

/// d(d(x)) = 0, checked by exact block multiplication.
bool differentials_compose_to_zero(const CochainComplex& complex);

/// Derived limit dimensions (index i), from exact ranks of the complex.
std::vector<long> cohomology_dims(const DiagramSlice& slice);

/// Closed form over a cycle poset: the codimension of the joint span of the
/// vertex spaces inside the space at the initial element.
long lim2_cn(const DiagramSlice& slice);

/// Spanning-forest reduction for an essentially 2-spherical diagram.
struct Lim2ForestResult {
  long dim = 0;                 // dim coker of the assembled cycle map
  std::vector<long> per_cycle;  // codimension per unspanned edge
  long kernel_dim = 0;          // dim (prod of cycle images / joint image)
};

Lim2ForestResult lim2_forest(const DiagramSlice& slice, const IncidenceGraph& graph,
                             const ForestDecomposition& forest);

}  // namespace kaclim

#endif
