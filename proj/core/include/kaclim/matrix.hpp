#ifndef KACLIM_MATRIX_HPP
#define KACLIM_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "kaclim/rational.hpp"

namespace kaclim {

/// Dense matrix over exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Mat identity(int n);
  /// Row-major construction, mostly for tests and small fixed matrices.
  static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  bool operator==(const Mat& rhs) const;

  Mat transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  /// Rows selected by index, in the given order.
  Mat select_rows(const std::vector<int>& row_ids) const;

  static Mat hstack(const std::vector<Mat>& parts);
  static Mat vstack(const std::vector<Mat>& parts);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Row rank, via fraction-free elimination.
int rank_of(Mat a);

/// Reduced row echelon form; pivot column indices appended to `pivots` if given.
Mat rref(Mat a, std::vector<int>* pivots = nullptr);

/// Canonical nullspace basis as columns (identity pattern on the free
/// coordinates, which are reported through `unit_rows` when non-null).
Mat nullspace(const Mat& a, std::vector<int>* unit_rows = nullptr);

/// Determinant of an integer matrix by Bareiss one-step elimination.
Int bareiss_det(std::vector<std::vector<Int>> m);

/// Multiplicative order of a square rational matrix, or 0 if it exceeds `cap`.
int matrix_order(const Mat& g, int cap);

}  // namespace kaclim

#endif
