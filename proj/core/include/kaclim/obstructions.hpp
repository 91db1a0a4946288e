#ifndef KACLIM_OBSTRUCTIONS_HPP
#define KACLIM_OBSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "kaclim/bk.hpp"

namespace kaclim {

enum class TargetProvenance { SuBuiltin, UserList, JoddTable };

/// Degrees of the rational Eilenberg-MacLane factors of the target group.
struct TargetDegrees {
  std::vector<int> degrees;  // sorted multiset
  TargetProvenance provenance = TargetProvenance::UserList;
};

/// Rational type of SU(n+1): degrees 3, 5, ..., 2n+1.
TargetDegrees su_target(int n);

TargetDegrees user_target(std::vector<int> degrees);

/// Odd part of the degree list for an indefinite indecomposable matrix:
/// one 3 when symmetric; corank copies of 1 in the Full variant.
TargetDegrees table_target(const Gcm& gcm, Variant variant);

/// Ranks of the groups obstructing torus-detection of null maps: a power of
/// a fixed divisible group, reported by rank only.
struct ObstructionReport {
  std::vector<std::pair<int, long>> per_degree;  // (n_j, kernel contribution)
  long total_rank = 0;   // rank of the obstruction group
  long kernel_total = 0; // rank of ker(V^T -> V^Y); equals total_rank
  long v_rank = 0;       // rank of V^Y itself: sum of h_dims over all n_j
};

/// Odd n_j contribute the full cohomology dimension, even n_j only the
/// nilpotent part (the kernel of restriction to the torus).
ObstructionReport obstruction_rank(const BKReport& source, const TargetDegrees& target);

}  // namespace kaclim

#endif
