#ifndef KACLIM_GCM_HPP
#define KACLIM_GCM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kaclim {

/// Validated generalized Cartan matrix: 2s on the diagonal, nonpositive
/// off-diagonal entries, and a symmetric zero pattern.
struct Gcm {
  int n = 0;
  std::vector<std::vector<long>> a;
  bool symmetric = false;
  bool indecomposable = false;
  int corank = 0;  // n minus the rational rank of the matrix

  long entry(int i, int j) const { return a[i][j]; }
};

enum class SubsetKind { Finite, Affine, Indefinite };
const char* subset_kind_name(SubsetKind kind);

/// Classification of a principal submatrix, with the per-component breakdown.
struct SubsetClass {
  SubsetKind kind = SubsetKind::Finite;
  struct Component {
    std::vector<int> vertices;  // 0-based indices
    SubsetKind kind;
  };
  std::vector<Component> components;
};

/// Which torus the reflection representation acts on: rank 2n - rank(A) for
/// the ambient group, rank n for the group of the derived Lie algebra.
enum class Variant { Full, Derived };

struct GcmInput {
  Gcm gcm;
  Variant variant = Variant::Full;
};

/// Validates raw entries and computes the derived fields.
Gcm make_gcm(std::vector<std::vector<long>> entries);

/// Parses {"matrix": [[...]], "variant": "full"|"derived"} (variant optional).
GcmInput parse_gcm(const std::string& json_text);

/// Subsets of {0..n-1} are bitmasks throughout.
using Subset = std::uint32_t;

int subset_size(Subset s);
std::vector<int> subset_indices(Subset s);

/// Standard trichotomy, decided per connected component by exact integer
/// principal minors. The empty subset is Finite.
SubsetClass classify_subset(const Gcm& gcm, Subset subset);

/// Coxeter bond order encoded with 0 for the infinite bond.
inline constexpr int kInfiniteBond = 0;

/// Order of s_i s_j from the entry product a_ij * a_ji.
int bond_order(long product);

/// Full matrix of bond orders; m_ii = 1.
std::vector<std::vector<int>> coxeter_labels(const Gcm& gcm);

}  // namespace kaclim

#endif
