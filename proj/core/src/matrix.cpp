#include "kaclim/matrix.hpp"

#include <cstdlib>
#include <stdexcept>

#include "kaclim/error.hpp"

namespace kaclim {

Rat rat_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorCode::BadInput, "bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != c) throw Error(ErrorCode::BadInput, "ragged rows");
    int j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::Internal, "matrix product shape mismatch");
  Mat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Rat& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::Internal, "matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::Internal, "matrix difference shape mismatch");
  Mat out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

bool Mat::operator==(const Mat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const Rat& v : data_)
    if (v != 0) return false;
  return true;
}

Mat Mat::select_rows(const std::vector<int>& row_ids) const {
  Mat out(int(row_ids.size()), cols_);
  for (int i = 0; i < int(row_ids.size()); ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(row_ids[i], j);
  return out;
}

Mat Mat::hstack(const std::vector<Mat>& parts) {
  int rows = parts.empty() ? 0 : parts.front().rows();
  int cols = 0;
  for (const Mat& p : parts) {
    if (p.rows() != rows) throw Error(ErrorCode::Internal, "hstack row mismatch");
    cols += p.cols();
  }
  Mat out(rows, cols);
  int off = 0;
  for (const Mat& p : parts) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < p.cols(); ++j) out(i, off + j) = p(i, j);
    off += p.cols();
  }
  return out;
}

Mat Mat::vstack(const std::vector<Mat>& parts) {
  int cols = parts.empty() ? 0 : parts.front().cols();
  int rows = 0;
  for (const Mat& p : parts) {
    if (p.cols() != cols) throw Error(ErrorCode::Internal, "vstack col mismatch");
    rows += p.rows();
  }
  Mat out(rows, cols);
  int off = 0;
  for (const Mat& p : parts) {
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < cols; ++j) out(off + i, j) = p(i, j);
    off += p.rows();
  }
  return out;
}

namespace {

// Scales a row to a primitive integer vector: multiply out denominators,
// divide by the content. Keeps elimination fraction-free.
void make_primitive(std::vector<Rat>& row) {
  Int den_lcm = 1;
  for (const Rat& v : row)
    if (v != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (Rat& v : row) {
    if (v == 0) continue;
    v *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
  }
  if (num_gcd > 1)
    for (Rat& v : row)
      if (v != 0) v /= num_gcd;
}

// Forward elimination on primitive integer rows; pivot is the candidate with
// the numerator of largest magnitude in the current column.
int eliminate(std::vector<std::vector<Rat>>& rows, int cols, std::vector<int>* pivot_cols,
              std::vector<int>* pivot_rows) {
  for (auto& r : rows) make_primitive(r);
  int nrows = int(rows.size());
  std::vector<bool> used(nrows, false);
  int rank = 0;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int best = -1;
    for (int i = 0; i < nrows; ++i) {
      if (used[i] || rows[i][col] == 0) continue;
      if (best < 0 ||
          mpz_cmpabs(rows[i][col].get_num_mpz_t(), rows[best][col].get_num_mpz_t()) > 0)
        best = i;
    }
    if (best < 0) continue;
    used[best] = true;
    if (pivot_cols) pivot_cols->push_back(col);
    if (pivot_rows) pivot_rows->push_back(best);
    ++rank;
    const Rat pivot = rows[best][col];
    for (int i = 0; i < nrows; ++i) {
      if (used[i] || rows[i][col] == 0) continue;
      const Rat factor = rows[i][col] / pivot;
      for (int j = col; j < cols; ++j) rows[i][j] -= factor * rows[best][j];
      make_primitive(rows[i]);
    }
  }
  return rank;
}

}  // namespace

int rank_of(Mat a) {
  std::vector<std::vector<Rat>> rows(a.rows(), std::vector<Rat>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return eliminate(rows, a.cols(), nullptr, nullptr);
}

Mat rref(Mat a, std::vector<int>* pivots) {
  std::vector<std::vector<Rat>> rows(a.rows(), std::vector<Rat>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  std::vector<int> pivot_cols, pivot_rows;
  eliminate(rows, a.cols(), &pivot_cols, &pivot_rows);
  int rank = int(pivot_cols.size());
  // Back-substitution: clear pivot columns above/below and normalize pivots.
  for (int i = rank - 1; i >= 0; --i) {
    auto& row = rows[pivot_rows[i]];
    const Rat pivot = row[pivot_cols[i]];
    for (Rat& v : row) v /= pivot;
    for (int k = 0; k < i; ++k) {
      auto& upper = rows[pivot_rows[k]];
      const Rat factor = upper[pivot_cols[i]];
      if (factor == 0) continue;
      for (int j = 0; j < a.cols(); ++j) upper[j] -= factor * row[j];
    }
  }
  Mat out(rank, a.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = rows[pivot_rows[i]][j];
  if (pivots) *pivots = pivot_cols;
  return out;
}

Mat nullspace(const Mat& a, std::vector<int>* unit_rows) {
  std::vector<int> pivots;
  Mat r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat basis(a.cols(), int(free_cols.size()));
  for (int k = 0; k < int(free_cols.size()); ++k) {
    basis(free_cols[k], k) = 1;
    for (int i = 0; i < int(pivots.size()); ++i) basis(pivots[i], k) = -r(i, free_cols[k]);
  }
  if (unit_rows) *unit_rows = free_cols;
  return basis;
}

Int bareiss_det(std::vector<std::vector<Int>> m) {
  int n = int(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int matrix_order(const Mat& g, int cap) {
  if (g.rows() != g.cols()) throw Error(ErrorCode::Internal, "order of non-square matrix");
  Mat p = g;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * g;
  }
  return 0;
}

}  // namespace kaclim
