#ifndef KACLIM_BK_HPP
#define KACLIM_BK_HPP

#include <optional>
#include <string>
#include <vector>

#include "kaclim/holim.hpp"
#include "kaclim/series.hpp"

namespace kaclim {

struct BkOptions {
  int subset_cap = 10;   // matrix sizes above this are rejected
  int degree_cap = 40;   // cohomological degree bound
};

/// Dimension data for H*(BK, Q) assembled from the derived-limit table of the
/// degree-wise invariant diagram; the spectral sequence collapses, so
/// h_dims(m) is the sum of lim^i in internal degree m - i.
struct BKReport {
  Variant variant = Variant::Full;
  int max_degree = 0;  // N: h_dims covers 0..N
  int torus_rank = 0;
  int chain_bound = 0;            // longest chain in the spherical poset
  int essential_sphericity = 0;   // longest chain in the core
  std::vector<std::vector<long>> lim;  // lim[i][m], internal degree m (even support)
  std::vector<long> h_dims;            // 0..N
  std::vector<long> nilpotent_dims;    // even m; odd entries stay 0
  PoincareSeries euler;
  std::optional<PoincareSeries> lim0_series;  // greedy product fit, additive to degree N
  std::optional<PoincareSeries> lim1_series;  // emitted only when lim^2 vanishes
  bool lim2_vanishes = false;
  std::string ring_note;

  long h(int m) const { return (m >= 0 && m <= max_degree) ? h_dims[m] : 0; }
  long lim_dim(int i, int m) const;
};

BKReport bk_cohomology(const Gcm& gcm, Variant variant, int max_degree,
                       const BkOptions& options = {});

}  // namespace kaclim

#endif
