#include "kaclim/verify.hpp"

#include <algorithm>
#include <sstream>

#include "kaclim/error.hpp"
#include "kaclim/holim.hpp"

namespace kaclim {

namespace {

struct Battery {
  const Gcm& gcm;
  Variant variant;
  int dmax;
  SphericalPoset poset;
  CorePoset core;
  Realization real;
  FinitePoset fp;
  std::vector<CheckResult> results;

  Battery(const Gcm& g, Variant v, int max_degree)
      : gcm(g),
        variant(v),
        dmax(max_degree / 2),
        poset(spherical_poset(g)),
        core(core_subposet(poset)),
        real(realization(g, v)),
        fp(poset.finite_poset()) {}

  void record(const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, pass ? "" : detail});
  }

  void downward_closed() {
    bool ok = true;
    std::string detail;
    for (Subset s : poset.elements)
      for (int j : subset_indices(s))
        if (!poset.contains(s & ~(Subset(1) << j))) {
          ok = false;
          detail = "missing facet of an element";
        }
    for (int i = 0; i < gcm.n; ++i)
      if (!poset.contains(Subset(1) << i)) {
        ok = false;
        detail = "missing singleton";
      }
    record("poset-downward-closed", ok, detail);
  }

  void rank2_criterion() {
    bool ok = true;
    for (int i = 0; i < gcm.n && ok; ++i)
      for (int j = i + 1; j < gcm.n && ok; ++j) {
        Subset pair = (Subset(1) << i) | (Subset(1) << j);
        bool finite = classify_subset(gcm, pair).kind == SubsetKind::Finite;
        bool small_product = gcm.a[i][j] * gcm.a[j][i] <= 3;
        bool bonded = bond_order(gcm.a[i][j] * gcm.a[j][i]) != kInfiniteBond;
        ok = (finite == small_product) && (finite == bonded);
      }
    record("rank2-criterion", ok, "pair classification disagrees with the entry product");
  }

  void reflections_and_braid() {
    bool refl = true;
    for (const Mat& g : real.generators) refl = refl && is_reflection(g);
    record("generators-are-reflections", refl, "a generator is not a reflection");

    bool braid = true;
    std::ostringstream detail;
    auto labels = coxeter_labels(gcm);
    for (int i = 0; i < gcm.n && braid; ++i)
      for (int j = i + 1; j < gcm.n && braid; ++j) {
        if (labels[i][j] == kInfiniteBond) continue;
        int order = matrix_order(real.generators[i] * real.generators[j], 64);
        if (order != labels[i][j]) {
          braid = false;
          detail << "order of s" << i + 1 << "s" << j + 1 << " is " << order << ", expected "
                 << labels[i][j];
        }
      }
    record("braid-orders", braid, detail.str());
  }

  void shephard_todd() {
    bool ok = true;
    std::ostringstream detail;
    int cap = std::min(dmax, 10);
    for (Subset s : poset.elements) {
      PoincareSeries series = invariant_series(coxeter_components(gcm, s), real.rank);
      std::vector<Int> coeffs = series.expand(2 * cap);
      for (int d = 0; d <= cap; ++d) {
        std::vector<Mat> gens;
        for (int i : subset_indices(s)) gens.push_back(real.generators[i]);
        long dim = fixed_subspace(gens, PolySpace::make(real.rank, d)).dim();
        if (coeffs[2 * d] != dim) {
          ok = false;
          detail << "subset mismatch at degree " << 2 * d;
        }
      }
    }
    record("shephard-todd", ok, detail.str());
  }

  void dihedral_decomposition() {
    bool ok = true;
    for (Subset s : poset.elements) {
      if (subset_size(s) != 2) continue;
      auto idx = subset_indices(s);
      const Mat& g1 = real.generators[idx[0]];
      const Mat& g2 = real.generators[idx[1]];
      for (int d = 0; d <= std::min(dmax, 12); ++d) {
        PolySpace space = PolySpace::make(real.rank, d);
        long det_rel = det_relative_subspace({g1, g2}, space).dim();
        auto [span, rest] = span_and_quotient(
            space.dim(), {fixed_subspace({g1}, space), fixed_subspace({g2}, space)});
        if (space.dim() != det_rel + span) ok = false;
      }
    }
    record("dihedral-decomposition", ok, "relative invariants do not complement the span");
  }

  void slice_checks() {
    bool monotone = true, ddzero = true, euler_id = true, oracle = true, core_ok = true;
    int cap = std::min(dmax, 6);

    IncidenceGraph graph;
    ForestDecomposition forest;
    bool two_level = true;
    try {
      graph = incidence_graph(poset);
      forest = spanning_forest_decomposition(graph);
    } catch (const Error&) {
      two_level = false;
    }

    std::vector<int> core_ids;
    for (Subset s : core.elements) core_ids.push_back(poset.index_of(s));

    for (int d = 0; d <= dmax; ++d) {
      DiagramSlice slice = build_diagram(real, poset.elements, fp, d);
      if (d <= cap) {
        for (int i = 0; i < fp.size(); ++i)
          for (int j = 0; j < fp.size(); ++j) {
            if (!fp.less(i, j)) continue;
            Mat joint = Mat::hstack({slice.spaces[i].basis, slice.spaces[j].basis});
            if (sparse_rank(SparseMat::from_dense(joint)) != slice.spaces[i].dim())
              monotone = false;
          }
        CochainComplex complex = build_cochain_complex(slice);
        if (!differentials_compose_to_zero(complex)) ddzero = false;
      }
      std::vector<long> lims = cohomology_dims(slice);
      long euler_chains = 0, euler_lims = 0;
      CochainComplex complex = build_cochain_complex(slice);
      for (size_t p = 0; p < complex.dims.size(); ++p)
        euler_chains += (p % 2 == 0) ? complex.dims[p] : -complex.dims[p];
      for (size_t i = 0; i < lims.size(); ++i) euler_lims += (i % 2 == 0) ? lims[i] : -lims[i];
      if (euler_chains != euler_lims) euler_id = false;

      long lim2 = lims.size() > 2 ? lims[2] : 0;
      if (two_level) {
        DiagramSlice gslice = slice;
        if (graph.over_core) {
          std::vector<Subset> celems = core.elements;
          gslice = build_diagram(real, celems, core.finite_poset(), d);
        }
        Lim2ForestResult f = lim2_forest(gslice, graph, forest);
        if (f.dim != lim2) oracle = false;
        long per_sum = 0;
        for (long c : f.per_cycle) per_sum += c;
        if (f.dim != per_sum + f.kernel_dim) oracle = false;
      }
      if (d <= cap) {
        DiagramSlice cslice = build_diagram(real, core.elements, core.finite_poset(), d);
        std::vector<long> clims = cohomology_dims(cslice);
        for (int i = 0; i <= 2; ++i) {
          long a = i < int(lims.size()) ? lims[i] : 0;
          long b = i < int(clims.size()) ? clims[i] : 0;
          if (a != b) core_ok = false;
        }
      }
    }
    record("slice-monotonicity", monotone, "a fixed space is not contained in its predecessor");
    record("differential-squares-to-zero", ddzero, "d∘d != 0");
    record("euler-identity", euler_id, "alternating sums of chains and limits disagree");
    if (two_level)
      record("lim2-closed-form-agreement", oracle,
             "forest reduction disagrees with the cochain complex");
    record("core-agreement", core_ok, "limits over the core differ from the full poset");
  }

  void euler_reconciliation() {
    bool ok = true;
    std::string detail;
    try {
      bk_cohomology(gcm, variant, 2 * dmax);
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    record("euler-reconciliation", ok, detail);
  }
};

}  // namespace

std::vector<CheckResult> run_verification(const Gcm& gcm, Variant variant, int max_degree) {
  Battery battery(gcm, variant, max_degree);
  battery.downward_closed();
  battery.rank2_criterion();
  battery.reflections_and_braid();
  battery.shephard_todd();
  battery.dihedral_decomposition();
  battery.slice_checks();
  battery.euler_reconciliation();
  return battery.results;
}

}  // namespace kaclim
