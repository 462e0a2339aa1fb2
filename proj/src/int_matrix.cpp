#include "detrep/int_matrix.hpp"

#include <utility>

#include "detrep/error.hpp"

namespace detrep {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  e_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  IntMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw Error("ragged rows");
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(int c) {
  for (int r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

void IntMatrix::row_axpy(int a, int b, const Int& q) {
  for (int c = 0; c < cols_; ++c) at(a, c) -= q * at(b, c);
}

void IntMatrix::col_axpy(int a, int b, const Int& q) {
  for (int r = 0; r < rows_; ++r) at(r, a) -= q * at(r, b);
}

void IntMatrix::rotate_rows_up(int from) {
  for (int r = from; r + 1 < rows_; ++r) swap_rows(r, r + 1);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("dimension mismatch in matrix product");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int r = k + 1;
      while (r < n && w.at(r, k) == 0) ++r;
      if (r == n) return 0;
      w.swap_rows(k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  Int d = w.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

namespace {

Int minor_det(const IntMatrix& m, int skip_row, int skip_col) {
  int n = m.rows();
  IntMatrix sub(n - 1, n - 1);
  int si = 0;
  for (int i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    int sj = 0;
    for (int j = 0; j < n; ++j) {
      if (j == skip_col) continue;
      sub.at(si, sj++) = m.at(i, j);
    }
    ++si;
  }
  return determinant(sub);
}

}  // namespace

IntMatrix invert_unimodular(const IntMatrix& m) {
  if (!m.is_square()) throw Error("inverse of non-square matrix");
  Int d = determinant(m);
  if (d != 1 && d != -1) throw Error("matrix is not unimodular");
  int n = m.rows();
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int c = minor_det(m, j, i);
      if ((i + j) % 2 != 0) c = -c;
      inv.at(i, j) = d * c;
    }
  return inv;
}

}  // namespace detrep
