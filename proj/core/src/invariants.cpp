#include "kaclim/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kaclim/error.hpp"

namespace kaclim {

namespace {

void gen_monomials(int vars, int degree, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (int(current.size()) == vars - 1) {
    current.push_back(degree - std::accumulate(current.begin(), current.end(), 0));
    out.push_back(current);
    current.pop_back();
    return;
  }
  int used = std::accumulate(current.begin(), current.end(), 0);
  for (int e = degree - used; e >= 0; --e) {
    current.push_back(e);
    gen_monomials(vars, degree, current, out);
    current.pop_back();
  }
}

}  // namespace

PolySpace PolySpace::make(int vars, int degree) {
  PolySpace ps;
  ps.vars = vars;
  ps.degree = degree;
  if (vars == 0) {
    if (degree == 0) ps.monomials.push_back({});
    return ps;
  }
  std::vector<int> current;
  gen_monomials(vars, degree, current, ps.monomials);
  return ps;
}

int PolySpace::index_of(const std::vector<int>& exponents) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), exponents,
                             [](const std::vector<int>& a, const std::vector<int>& b) {
                               return std::lexicographical_compare(b.begin(), b.end(), a.begin(),
                                                                   a.end());
                             });
  if (it == monomials.end() || *it != exponents) return -1;
  return int(it - monomials.begin());
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat::identity(ambient);
  s.unit_rows.resize(ambient);
  std::iota(s.unit_rows.begin(), s.unit_rows.end(), 0);
  return s;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(ambient, 0);
  return s;
}

Subspace Subspace::from_span(int ambient, const Mat& spanning_columns) {
  // Rows of the RREF of the transpose are a canonical basis with identity
  // pattern on the pivot coordinates.
  std::vector<int> pivots;
  Mat basis_rows = rref(spanning_columns.transpose(), &pivots);
  Subspace s;
  s.ambient = ambient;
  s.basis = basis_rows.transpose();
  s.unit_rows = pivots;
  return s;
}

namespace {

// Sparse polynomial on exponent keys.
using ExpPoly = std::map<std::vector<int>, Rat>;

ExpPoly poly_mul(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}



}  // namespace

SparseMat symmetric_power_action_sparse(const Mat& g, const PolySpace& space) {
  const int r = space.vars;
  if (g.rows() != r || g.cols() != r)
    throw Error(ErrorCode::AmbientMismatch, "matrix size does not match the variable count");
  const int dim = space.dim();
  SparseMat out(dim, dim);

  std::vector<bool> unit(r, false);
  std::vector<ExpPoly> var_image(r);
  for (int j = 0; j < r; ++j) {
    bool is_unit = true;
    for (int i = 0; i < r; ++i) {
      if (g(i, j) != (i == j ? 1 : 0)) is_unit = false;
      if (g(i, j) != 0) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        var_image[j][e] = g(i, j);
      }
    }
    unit[j] = is_unit;
  }
  // Powers of the non-unit variable images, up to the degree actually used.
  std::vector<std::vector<ExpPoly>> powers(r);
  for (int j = 0; j < r; ++j) {
    if (unit[j]) continue;
    powers[j].resize(space.degree + 1);
    powers[j][0] = ExpPoly{{std::vector<int>(r, 0), Rat(1)}};
    for (int k = 1; k <= space.degree; ++k) powers[j][k] = poly_mul(powers[j][k - 1], var_image[j]);
  }

  for (int col = 0; col < dim; ++col) {
    const auto& exps = space.monomials[col];
    std::vector<int> shift(r, 0);
    ExpPoly image{{std::vector<int>(r, 0), Rat(1)}};
    for (int j = 0; j < r; ++j) {
      if (exps[j] == 0) continue;
      if (unit[j])
        shift[j] += exps[j];
      else
        image = poly_mul(image, powers[j][exps[j]]);
    }
    for (const auto& [e, coeff] : image) {
      std::vector<int> key(r);
      for (int i = 0; i < r; ++i) key[i] = e[i] + shift[i];
      int row = space.index_of(key);
      if (row < 0) throw Error(ErrorCode::Internal, "monomial outside the degree slice");
      out.add(row, col, coeff);
    }
  }
  return out;
}

Mat symmetric_power_action(const Mat& g, const PolySpace& space) {
  return symmetric_power_action_sparse(g, space).to_dense();
}

namespace {

Subspace eigen_subspace(const std::vector<Mat>& gens, const PolySpace& space, int sign) {
  const int dim = space.dim();
  if (gens.empty()) return Subspace::full(dim);
  SparseMat stacked(dim * int(gens.size()), dim);
  for (int k = 0; k < int(gens.size()); ++k) {
    SparseMat act = symmetric_power_action_sparse(gens[k], space);
    for (int i = 0; i < dim; ++i)
      for (const auto& [c, v] : act.row(i)) stacked.add(dim * k + i, c, v);
    stacked.add_identity_block(dim * k, 0, dim, -sign);
  }
  Subspace s;
  s.ambient = dim;
  s.basis = sparse_nullspace(stacked, &s.unit_rows);
  return s;
}

}  // namespace

Subspace fixed_subspace(const std::vector<Mat>& gens, const PolySpace& space) {
  return eigen_subspace(gens, space, +1);
}

bool is_reflection(const Mat& g) {
  if (g.rows() != g.cols()) return false;
  if (!(g * g).is_identity()) return false;
  Mat shifted = g - Mat::identity(g.rows());
  return rank_of(shifted) == 1;
}

Subspace det_relative_subspace(const std::vector<Mat>& gens, const PolySpace& space) {
  for (const Mat& g : gens)
    if (!is_reflection(g)) throw Error(ErrorCode::NotAReflection, "generator is not a reflection");
  if (gens.empty()) return Subspace::zero(space.dim());
  return eigen_subspace(gens, space, -1);
}

std::pair<long, long> span_and_quotient(int ambient_dim, const std::vector<Subspace>& parts) {
  std::vector<Mat> bases;
  for (const Subspace& p : parts) {
    if (p.ambient != ambient_dim)
      throw Error(ErrorCode::AmbientMismatch, "subspace ambient dimension mismatch");
    bases.push_back(p.basis);
  }
  long sum_dim = 0;
  if (!bases.empty()) sum_dim = sparse_rank(SparseMat::from_dense(Mat::hstack(bases)));
  return {sum_dim, ambient_dim - sum_dim};
}

Mat inclusion_coeffs(const Subspace& parent, const Subspace& child) {
  if (parent.ambient != child.ambient)
    throw Error(ErrorCode::AmbientMismatch, "inclusion across different ambient spaces");
  return child.basis.select_rows(parent.unit_rows);
}

}  // namespace kaclim
