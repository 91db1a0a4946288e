#include "kaclim/holim.hpp"

#include <algorithm>
#include <map>

#include "kaclim/error.hpp"

namespace kaclim {

DiagramSlice build_diagram(const Realization& realization, const std::vector<Subset>& elements,
                           const FinitePoset& poset, int degree) {
  if (int(elements.size()) != poset.size())
    throw Error(ErrorCode::BadInput, "element list does not match the poset");
  PolySpace space = PolySpace::make(realization.rank, degree);
  DiagramSlice slice;
  slice.poset = poset;
  slice.ambient = space.dim();
  slice.degree = degree;
  for (Subset s : elements) {
    std::vector<Mat> gens;
    for (int i : subset_indices(s)) gens.push_back(realization.generators[i]);
    slice.spaces.push_back(fixed_subspace(gens, space));
  }
  return slice;
}

CochainComplex build_cochain_complex(const DiagramSlice& slice) {
  auto chains = slice.poset.chains();
  CochainComplex complex;

  // Block offsets per chain; each chain carries the space at its minimum.
  std::vector<std::vector<long>> offsets(chains.size());
  for (size_t p = 0; p < chains.size(); ++p) {
    long total = 0;
    for (const auto& chain : chains[p]) {
      offsets[p].push_back(total);
      total += slice.spaces[chain.front()].dim();
    }
    complex.dims.push_back(total);
  }

  for (size_t p = 0; p + 1 < chains.size(); ++p) {
    SparseMat d(complex.dims[p + 1], complex.dims[p]);
    // Face maps index p-chains; build a lookup from chain to block id.
    std::map<std::vector<int>, int> block_of;
    for (int b = 0; b < int(chains[p].size()); ++b) block_of[chains[p][b]] = b;
    for (int row_block = 0; row_block < int(chains[p + 1].size()); ++row_block) {
      const auto& chain = chains[p + 1][row_block];
      long r0 = offsets[p + 1][row_block];
      int row_dim = slice.spaces[chain.front()].dim();
      for (size_t k = 0; k < chain.size(); ++k) {
        std::vector<int> face = chain;
        face.erase(face.begin() + k);
        long c0 = offsets[p][block_of.at(face)];
        if (k == 0) {
          // Dropping the minimum composes with the inclusion of its successor.
          Mat incl = inclusion_coeffs(slice.spaces[chain[0]], slice.spaces[chain[1]]);
          d.add_block(r0, c0, incl, +1);
        } else {
          d.add_identity_block(r0, c0, row_dim, (k % 2 == 0) ? +1 : -1);
        }
      }
    }
    complex.differential.push_back(std::move(d));
  }
  return complex;
}

bool differentials_compose_to_zero(const CochainComplex& complex) {
  for (size_t p = 0; p + 1 < complex.differential.size(); ++p)
    if (!(complex.differential[p + 1] * complex.differential[p]).is_zero()) return false;
  return true;
}

std::vector<long> cohomology_dims(const DiagramSlice& slice) {
  CochainComplex complex = build_cochain_complex(slice);
  std::vector<long> ranks(complex.dims.size(), 0);
  for (size_t p = 0; p < complex.differential.size(); ++p)
    ranks[p] = sparse_rank(complex.differential[p]);
  std::vector<long> lims(complex.dims.size(), 0);
  for (size_t p = 0; p < complex.dims.size(); ++p) {
    long kernel = complex.dims[p] - (p < complex.differential.size() ? ranks[p] : 0);
    long image = (p == 0) ? 0 : ranks[p - 1];
    lims[p] = kernel - image;
  }
  return lims;
}

namespace {

long span_rank(const DiagramSlice& slice, const std::vector<int>& elements) {
  std::vector<Mat> bases;
  for (int e : elements) bases.push_back(slice.spaces[e].basis);
  if (bases.empty()) return 0;
  return sparse_rank(SparseMat::from_dense(Mat::hstack(bases)));
}

}  // namespace

long lim2_cn(const DiagramSlice& slice) {
  IncidenceGraph graph;
  try {
    graph = incidence_structure(slice.poset);
  } catch (const Error&) {
    throw Error(ErrorCode::NotCnPoset, "not a two-level poset");
  }
  int n = int(graph.vertices.size());
  if (n < 3 || int(graph.edges.size()) != n)
    throw Error(ErrorCode::NotCnPoset, "vertex and edge counts do not match a cycle");
  std::vector<int> deg(n, 0);
  for (const auto& e : graph.edges) ++deg[e.a], ++deg[e.b];
  for (int d : deg)
    if (d != 2) throw Error(ErrorCode::NotCnPoset, "graph is not a single cycle");
  ForestDecomposition forest = spanning_forest_decomposition(graph);
  if (forest.unspanned.size() != 1)
    throw Error(ErrorCode::NotCnPoset, "graph is not a single cycle");

  std::vector<int> vertex_elems;
  for (int v : graph.vertices) vertex_elems.push_back(v);
  return slice.spaces[graph.initial].dim() - span_rank(slice, vertex_elems);
}

Lim2ForestResult lim2_forest(const DiagramSlice& slice, const IncidenceGraph& graph,
                             const ForestDecomposition& forest) {
  const Subspace& init_space = slice.spaces[graph.initial];
  const int init_dim = init_space.dim();
  const int ne = int(graph.edges.size());

  // One column block per edge-endpoint slot, in a fixed order.
  std::vector<long> slot_offset(2 * ne, 0);
  long cols = 0;
  for (int e = 0; e < ne; ++e)
    for (int side = 0; side < 2; ++side) {
      slot_offset[2 * e + side] = cols;
      int v = side == 0 ? graph.edges[e].a : graph.edges[e].b;
      cols += slice.spaces[graph.vertices[v]].dim();
    }

  SparseMat boundary(long(forest.cycles.size()) * init_dim, cols);
  auto add_slot = [&](int row_block, int edge, int vertex_pos, int sign) {
    int side = graph.edges[edge].a == vertex_pos ? 0 : 1;
    const Subspace& vspace = slice.spaces[graph.vertices[vertex_pos]];
    Mat incl = inclusion_coeffs(init_space, vspace);
    boundary.add_block(long(row_block) * init_dim, slot_offset[2 * edge + side], incl, sign);
  };

  Lim2ForestResult out;
  for (int k = 0; k < int(forest.cycles.size()); ++k) {
    const auto& cycle = forest.cycles[k];
    // Signed traversal: entering endpoint plus, leaving endpoint minus.
    for (size_t i = 0; i < cycle.path_edges.size(); ++i) {
      add_slot(k, cycle.path_edges[i], cycle.path_vertices[i], +1);
      add_slot(k, cycle.path_edges[i], cycle.path_vertices[i + 1], -1);
    }
    add_slot(k, cycle.edge, cycle.path_vertices.back(), +1);
    add_slot(k, cycle.edge, cycle.path_vertices.front(), -1);

    std::vector<int> cycle_vertex_elems;
    for (int v : cycle.path_vertices) cycle_vertex_elems.push_back(graph.vertices[v]);
    out.per_cycle.push_back(init_dim - span_rank(slice, cycle_vertex_elems));
  }

  long rank = sparse_rank(boundary);
  out.dim = long(forest.cycles.size()) * init_dim - rank;
  long cycle_rank_sum = 0;
  for (long c : out.per_cycle) cycle_rank_sum += init_dim - c;
  out.kernel_dim = cycle_rank_sum - rank;
  return out;
}

}  // namespace kaclim
