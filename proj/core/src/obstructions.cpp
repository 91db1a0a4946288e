#include "kaclim/obstructions.hpp"

#include <algorithm>

#include "kaclim/error.hpp"

namespace kaclim {

TargetDegrees su_target(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "su target needs n >= 1");
  TargetDegrees t;
  t.provenance = TargetProvenance::SuBuiltin;
  for (int k = 1; k <= n; ++k) t.degrees.push_back(2 * k + 1);
  return t;
}

TargetDegrees user_target(std::vector<int> degrees) {
  for (int d : degrees)
    if (d < 1) throw Error(ErrorCode::BadInput, "target degrees must be positive");
  std::sort(degrees.begin(), degrees.end());
  return {std::move(degrees), TargetProvenance::UserList};
}

TargetDegrees table_target(const Gcm& gcm, Variant variant) {
  Subset all = (gcm.n >= 32) ? ~Subset(0) : (Subset(1) << gcm.n) - 1;
  if (!gcm.indecomposable || classify_subset(gcm, all).kind != SubsetKind::Indefinite)
    throw Error(ErrorCode::TableInapplicable,
                "the odd-degree table applies to indefinite indecomposable matrices only");
  TargetDegrees t;
  t.provenance = TargetProvenance::JoddTable;
  if (variant == Variant::Full)
    for (int i = 0; i < gcm.corank; ++i) t.degrees.push_back(1);
  if (gcm.symmetric) t.degrees.push_back(3);
  return t;
}

ObstructionReport obstruction_rank(const BKReport& source, const TargetDegrees& target) {
  ObstructionReport out;
  for (int nj : target.degrees)
    if (nj > source.max_degree)
      throw Error(ErrorCode::DegreeNotCovered,
                  "target degree " + std::to_string(nj) + " exceeds the computed range");
  for (int nj : target.degrees) {
    long contribution =
        (nj % 2 == 1) ? source.h_dims[nj] : source.nilpotent_dims[nj];
    out.per_degree.emplace_back(nj, contribution);
    out.kernel_total += contribution;
    out.v_rank += source.h_dims[nj];
  }
  out.total_rank = out.kernel_total;
  return out;
}

}  // namespace kaclim
