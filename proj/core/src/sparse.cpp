#include "kaclim/sparse.hpp"

#include <algorithm>
#include <map>

#include "kaclim/error.hpp"

namespace kaclim {

void SparseMat::add(int r, int c, const Rat& v) {
  if (v == 0) return;
  data_[r].emplace_back(c, v);
}

void SparseMat::add_block(int r0, int c0, const Mat& block, int scale) {
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) {
      const Rat& v = block(i, j);
      if (v != 0) data_[r0 + i].emplace_back(c0 + j, scale == 1 ? v : Rat(scale) * v);
    }
}

void SparseMat::add_identity_block(int r0, int c0, int n, int scale) {
  for (int i = 0; i < n; ++i) data_[r0 + i].emplace_back(c0 + i, Rat(scale));
}

SparseMat SparseMat::from_dense(const Mat& m) {
  SparseMat out(m.rows(), m.cols());
  out.add_block(0, 0, m);
  return out;
}

namespace {

using Row = std::vector<SparseMat::Entry>;

// Sort by column and combine duplicate contributions.
Row normalized(const Row& raw) {
  Row row = raw;
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Row out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, v);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

// target -= factor * source, merging sorted rows.
Row axpy(const Row& target, const Rat& factor, const Row& source) {
  Row out;
  out.reserve(target.size() + source.size());
  size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, -factor * source[j].second);
      ++j;
    } else {
      Rat v = target[i].second - factor * source[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Elimination {
  std::vector<Row> rows;
  std::vector<bool> alive;
  std::vector<int> col_count;
  std::vector<std::vector<int>> col_rows;  // lazy: may hold stale row ids
  std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order

  explicit Elimination(const SparseMat& a)
      : alive(a.rows(), true), col_count(a.cols(), 0), col_rows(a.cols()) {
    rows.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) rows.push_back(normalized(a.row(i)));
    for (int i = 0; i < a.rows(); ++i) {
      if (rows[i].empty()) alive[i] = false;
      for (const auto& [c, v] : rows[i]) {
        ++col_count[c];
        col_rows[c].push_back(i);
      }
    }
  }

  bool row_has(int r, int c) const {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == c;
  }

  void run() {
    for (;;) {
      int pcol = -1;
      for (int c = 0; c < int(col_count.size()); ++c)
        if (col_count[c] > 0 && (pcol < 0 || col_count[c] < col_count[pcol])) pcol = c;
      if (pcol < 0) break;

      // Prefer short rows with unit pivot entries; ties resolve by row id.
      int prow = -1;
      bool prow_unit = false;
      auto& candidates = col_rows[pcol];
      std::erase_if(candidates, [&](int r) { return !alive[r] || !row_has(r, pcol); });
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (int r : candidates) {
        const Rat& v = entry(r, pcol);
        bool unit = v.get_den() == 1 && mpz_cmpabs_ui(v.get_num_mpz_t(), 1) == 0;
        if (prow < 0 || std::tuple(!unit, rows[r].size(), r) <
                            std::tuple(!prow_unit, rows[prow].size(), prow))
          prow = r, prow_unit = unit;
      }

      retire(prow);
      pivots.emplace_back(prow, pcol);
      const Rat pivot = entry(prow, pcol);
      for (int r : candidates) {
        if (r == prow || !alive[r]) continue;
        Rat factor = entry(r, pcol) / pivot;
        replace_row(r, axpy(rows[r], factor, rows[prow]));
      }
    }
  }

  const Rat& entry(int r, int c) const {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return it->second;
  }

  void retire(int r) {
    alive[r] = false;
    for (const auto& [c, v] : rows[r]) --col_count[c];
  }

  void replace_row(int r, Row next) {
    for (const auto& [c, v] : rows[r]) --col_count[c];
    rows[r] = std::move(next);
    for (const auto& [c, v] : rows[r]) {
      ++col_count[c];
      col_rows[c].push_back(r);
    }
    if (rows[r].empty()) alive[r] = false;
  }
};

}  // namespace

long sparse_rank(const SparseMat& a) {
  Elimination e(a);
  e.run();
  return long(e.pivots.size());
}

Mat sparse_nullspace(const SparseMat& a, std::vector<int>* unit_rows) {
  Elimination e(a);
  e.run();
  const auto& pivots = e.pivots;
  int rank = int(pivots.size());

  // Reduce each pivot row against later pivots, newest first, and normalize.
  std::vector<int> pivot_col_of_row(a.cols(), -1);
  for (int i = 0; i < rank; ++i) pivot_col_of_row[pivots[i].second] = i;
  for (int i = rank - 1; i >= 0; --i) {
    auto& [prow, pcol] = pivots[i];
    Row reduced = e.rows[prow];
    for (;;) {
      bool changed = false;
      for (const auto& [c, v] : reduced) {
        int k = pivot_col_of_row[c];
        if (k > i) {
          reduced = axpy(reduced, v / e.entry(pivots[k].first, pivots[k].second),
                         e.rows[pivots[k].first]);
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    e.rows[prow] = std::move(reduced);
  }

  std::vector<bool> is_pivot_col(a.cols(), false);
  for (const auto& [r, c] : pivots) is_pivot_col[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot_col[c]) free_cols.push_back(c);

  Mat basis(a.cols(), int(free_cols.size()));
  std::vector<int> col_to_free(a.cols(), -1);
  for (int k = 0; k < int(free_cols.size()); ++k) {
    basis(free_cols[k], k) = 1;
    col_to_free[free_cols[k]] = k;
  }
  for (const auto& [prow, pcol] : pivots) {
    const Rat& pivot = e.entry(prow, pcol);
    for (const auto& [c, v] : e.rows[prow]) {
      int k = col_to_free[c];
      if (k >= 0) basis(pcol, k) = -v / pivot;
    }
  }
  if (unit_rows) *unit_rows = free_cols;
  return basis;
}

Mat SparseMat::to_dense() const {
  Mat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) out(i, c) += v;
  return out;
}

SparseMat SparseMat::operator*(const SparseMat& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::Internal, "sparse product shape mismatch");
  SparseMat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::map<int, Rat> acc;
    for (const auto& [k, v] : normalized(data_[i]))
      for (const auto& [j, w] : normalized(rhs.data_[k])) acc[j] += v * w;
    for (const auto& [j, v] : acc)
      if (v != 0) out.data_[i].emplace_back(j, v);
  }
  return out;
}

bool SparseMat::is_zero() const {
  for (int i = 0; i < rows_; ++i)
    for (const auto& [c, v] : normalized(data_[i]))
      if (v != 0) return false;
  return true;
}

long SparseMat::entry_count() const {
  long n = 0;
  for (const auto& row : data_) n += long(row.size());
  return n;
}

}  // namespace kaclim
