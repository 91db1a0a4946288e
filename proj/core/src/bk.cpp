#include "kaclim/bk.hpp"

#include <algorithm>

#include "kaclim/error.hpp"

namespace kaclim {

long BKReport::lim_dim(int i, int m) const {
  if (i < 0 || i >= int(lim.size()) || m < 0 || m >= int(lim[i].size())) return 0;
  return lim[i][m];
}

BKReport bk_cohomology(const Gcm& gcm, Variant variant, int max_degree,
                       const BkOptions& options) {
  if (max_degree < 0 || max_degree > options.degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded,
                "max degree " + std::to_string(max_degree) + " exceeds the cap " +
                    std::to_string(options.degree_cap));
  const int n = max_degree;
  const int dmax = n / 2;

  SphericalPoset poset = spherical_poset(gcm, options.subset_cap);
  CorePoset core = core_subposet(poset);
  Realization real = realization(gcm, variant);
  FinitePoset fp = poset.finite_poset();

  BKReport report;
  report.variant = variant;
  report.max_degree = n;
  report.torus_rank = real.rank;
  report.chain_bound = fp.max_chain_length();
  report.essential_sphericity = core.essential_sphericity;
  report.lim.assign(report.chain_bound + 1, std::vector<long>(n + 1, 0));

  for (int d = 0; d <= dmax; ++d) {
    DiagramSlice slice = build_diagram(real, poset.elements, fp, d);
    std::vector<long> lims = cohomology_dims(slice);
    for (int i = 0; i < int(lims.size()) && i <= report.chain_bound; ++i)
      if (2 * d <= n) report.lim[i][2 * d] = lims[i];
  }

  report.h_dims.assign(n + 1, 0);
  for (int m = 0; m <= n; ++m)
    for (int i = 0; i <= report.chain_bound && i <= m; ++i)
      if ((m - i) % 2 == 0 && (m - i) / 2 <= dmax) report.h_dims[m] += report.lim[i][m - i];

  report.nilpotent_dims.assign(n + 1, 0);
  for (int m = 0; m <= n; m += 2) report.nilpotent_dims[m] = report.h_dims[m] - report.lim[0][m];

  // Euler series from the invariant-ring series of every spherical subset.
  std::vector<PoincareSeries> per_element;
  for (Subset s : poset.elements)
    per_element.push_back(invariant_series(coxeter_components(gcm, s), real.rank));
  report.euler = euler_characteristic_series(fp, per_element);

  // Reconciliation: the rational function and the degree-wise table must
  // agree coefficient for coefficient.
  std::vector<Int> euler_coeffs = report.euler.expand(n);
  for (int m = 0; m <= n; ++m) {
    Int expected = 0;
    if (m % 2 == 0 && m / 2 <= dmax)
      for (int i = 0; i <= report.chain_bound; ++i)
        expected += Int((i % 2 == 0) ? report.lim[i][m] : -report.lim[i][m]);
    if (m % 2 == 0 && m / 2 <= dmax && euler_coeffs[m] != expected)
      throw Error(ErrorCode::Internal, "Euler series disagrees with the limit table at degree " +
                                           std::to_string(m));
    if (m % 2 == 1 && euler_coeffs[m] != 0)
      throw Error(ErrorCode::Internal, "Euler series has an odd-degree term");
  }

  report.lim2_vanishes = true;
  for (int m = 0; m <= n; ++m)
    if (report.lim_dim(2, m) != 0) report.lim2_vanishes = false;

  std::vector<Int> lim0_coeffs(n + 1, Int(0));
  for (int m = 0; m <= n; ++m)
    if (m % 2 == 0 && m / 2 <= dmax) lim0_coeffs[m] = report.lim[0][m];
  if (auto fit = greedy_denominator_fit(lim0_coeffs)) {
    report.lim0_series = PoincareSeries::one_over(*fit);
    std::string factors;
    for (int k : *fit) factors += (factors.empty() ? "" : ",") + std::to_string(k);
    report.ring_note = "lim0 fits prod 1/(1-t^k), k in {" + factors + "} (additive, to degree " +
                       std::to_string(n) + ")";
  }

  // With lim^2 = 0 and no deeper chains in the core, the connecting series is
  // the difference of the invariant series and the Euler characteristic.
  if (report.lim2_vanishes && report.essential_sphericity <= 2 && report.lim0_series) {
    PoincareSeries lim1 = *report.lim0_series - report.euler;
    std::vector<Int> got = lim1.expand(n);
    for (int m = 0; m <= n; ++m) {
      Int expected = (m % 2 == 0 && m / 2 <= dmax) ? Int(report.lim[1][m]) : Int(0);
      if (got[m] != expected)
        throw Error(ErrorCode::Internal, "connecting series disagrees with the limit table");
    }
    report.lim1_series = lim1.canonical();
  }
  return report;
}

}  // namespace kaclim
