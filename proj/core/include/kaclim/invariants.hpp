#ifndef KACLIM_INVARIANTS_HPP
#define KACLIM_INVARIANTS_HPP

#include <utility>
#include <vector>

#include "kaclim/matrix.hpp"
#include "kaclim/sparse.hpp"

namespace kaclim {

/// Monomials of one total degree in r variables, in descending graded-lex
/// order. This basis and its order are fixed everywhere.
struct PolySpace {
  int vars = 0;
  int degree = 0;
  std::vector<std::vector<int>> monomials;

  static PolySpace make(int vars, int degree);
  int dim() const { return int(monomials.size()); }
  int index_of(const std::vector<int>& exponents) const;
};

/// Subspace of a coordinate space, with a basis in canonical reduced form:
/// the rows listed in `unit_rows` carry an identity pattern, so coordinates
/// of any member vector can be read off those rows.
struct Subspace {
  int ambient = 0;
  Mat basis;                   // ambient x dim
  std::vector<int> unit_rows;  // size dim

  int dim() const { return basis.cols(); }
  static Subspace full(int ambient);
  static Subspace zero(int ambient);
  /// Canonicalizes a raw spanning set (columns need not be independent).
  static Subspace from_span(int ambient, const Mat& spanning_columns);
};

/// Matrix of the substitution action t_j -> sum_i g(i,j) t_i on the
/// degree-d monomial basis. Functorial: action(g*h) = action(g)*action(h).
SparseMat symmetric_power_action_sparse(const Mat& g, const PolySpace& space);
Mat symmetric_power_action(const Mat& g, const PolySpace& space);

/// Joint fixed space of the generators (empty list gives the full space).
Subspace fixed_subspace(const std::vector<Mat>& gens, const PolySpace& space);

/// Involution with a codimension-one fixed space.
bool is_reflection(const Mat& g);

/// Polynomials negated by every generator; throws NotAReflection unless all
/// generators are reflections.
Subspace det_relative_subspace(const std::vector<Mat>& gens, const PolySpace& space);

/// (rank of the joint span, codimension in the ambient space).
std::pair<long, long> span_and_quotient(int ambient_dim, const std::vector<Subspace>& parts);

/// Coordinates of `child` members in the basis of `parent`; requires
/// child <= parent as subspaces.
Mat inclusion_coeffs(const Subspace& parent, const Subspace& child);

}  // namespace kaclim

#endif
