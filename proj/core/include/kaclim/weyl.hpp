#ifndef KACLIM_WEYL_HPP
#define KACLIM_WEYL_HPP

#include <string>
#include <vector>

#include "kaclim/gcm.hpp"
#include "kaclim/matrix.hpp"
#include "kaclim/series.hpp"

namespace kaclim {

/// Reflection representation of the simple generators on the degree-2
/// cohomology of the torus.
struct Realization {
  int rank = 0;  // torus rank r
  Variant variant = Variant::Full;
  std::vector<Mat> generators;  // n matrices, each rank x rank
};

/// Derived: rank n action dual to s_i(e_j) = e_j - a_ji e_i on the coroot
/// basis. Full: rank 2n - rank(A), coroots completed to a basis by the
/// lexicographically first admissible set of unit coordinate vectors.
Realization realization(const Gcm& gcm, Variant variant);

/// Connected finite Coxeter components of a spherical subset, with their
/// fundamental degrees.
struct CoxeterComponent {
  std::string label;          // A3, B2, I2(6), ...
  std::vector<int> vertices;  // 0-based indices
  std::vector<int> degrees;
};

struct CoxeterTypeReport {
  std::vector<CoxeterComponent> components;
  std::vector<int> degrees;  // sorted multiset, one entry per subset index
  unsigned long long order = 1;
};

CoxeterTypeReport coxeter_components(const Gcm& gcm, Subset subset);

/// Invariant ring series: prod 1/(1 - t^(2*d_k)) * 1/(1 - t^2)^(r - |I|),
/// with polynomial generators sitting in cohomological degree 2.
PoincareSeries invariant_series(const CoxeterTypeReport& report, int torus_rank);

}  // namespace kaclim

#endif
