#pragma once

#include <initializer_list>
#include <vector>

#include "detrep/bigint.hpp"

namespace detrep {

// Dense matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void negate_col(int c);
  // row a -= q * row b / col a -= q * col b
  void row_axpy(int a, int b, const Int& q);
  void col_axpy(int a, int b, const Int& q);
  // rows [from, rows): first one moves to the bottom, the rest shift up
  void rotate_rows_up(int from);

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transposed() const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination; throws when the
// matrix is not square.
Int determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +/-1, via the adjugate; exact integer
// result. Throws when |det| != 1.
IntMatrix invert_unimodular(const IntMatrix& m);

}  // namespace detrep
