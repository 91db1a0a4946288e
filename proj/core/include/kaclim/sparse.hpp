#ifndef KACLIM_SPARSE_HPP
#define KACLIM_SPARSE_HPP

#include <utility>
#include <vector>

#include "kaclim/matrix.hpp"
#include "kaclim/rational.hpp"

namespace kaclim {

/// Sparse matrix over exact rationals, row-major with sorted columns.
class SparseMat {
 public:
  using Entry = std::pair<int, Rat>;

  SparseMat() = default;
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& row(int i) const { return data_[i]; }

  void add(int r, int c, const Rat& v);
  /// Dense block at offset (r0, c0), scaled by `scale`.
  void add_block(int r0, int c0, const Mat& block, int scale = 1);
  void add_identity_block(int r0, int c0, int n, int scale = 1);

  static SparseMat from_dense(const Mat& m);
  Mat to_dense() const;

  SparseMat operator*(const SparseMat& rhs) const;
  bool is_zero() const;
  long entry_count() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<Entry>> data_;
  friend long sparse_rank(const SparseMat&);
  friend Mat sparse_nullspace(const SparseMat&, std::vector<int>*);
};

/// Rank via sparse elimination with minimum-fill style pivoting.
long sparse_rank(const SparseMat& a);

/// Nullspace basis as dense columns with identity pattern on the free
/// coordinates (reported through `unit_rows` when non-null). Deterministic.
Mat sparse_nullspace(const SparseMat& a, std::vector<int>* unit_rows = nullptr);

}  // namespace kaclim

#endif
