#pragma once

#include <string>
#include <vector>

#include "detrep/chains.hpp"
#include "detrep/euclid.hpp"
#include "detrep/pencil.hpp"

namespace detrep {

// n x n pencil over the chain form: an integer block from linear_form_matrix
// stacked over the monomial row, then one column operation col_i -= x_v*col_j
// per successor link. Each column ends up affine in a single variable and the
// symbolic determinant equals the chain form's polynomial.
PencilMatrix ndr(const ChainForm& cf, const std::vector<std::string>& vars);

struct TdrResult {
  PencilMatrix matrix;
  IntMatrix row_ops;  // unimodular; matrix = row_ops * input * col_ops entrywise
  IntMatrix col_ops;  // permutation/negation only
};

// Triangular form: per column, constant rows sink to the bottom, a
// generalized-Euclid pass puts the gcd of the variable coefficients on the
// diagonal and zeroes below it, and above-diagonal coefficients are reduced
// modulo the diagonal. A final first-column negation repairs the determinant
// sign when the applied permutations flipped it.
TdrResult tdr_full(const PencilMatrix& ndr_matrix);
PencilMatrix tdr(const PencilMatrix& ndr_matrix);

struct RdrResult {
  PencilMatrix matrix;
  IntMatrix col_ops;  // unimodular
  Int block_det = 1;  // determinant of the eliminated triangular block
  int constant_rows = 0;
};

// Block reduction of a TDR: unimodular column operations zero the constant
// rows left of the diagonal, the trailing triangular block's determinant is
// absorbed into the first row of the leading block, and the constant rows
// are dropped.
RdrResult rdr_full(const PencilMatrix& tdr_matrix);
PencilMatrix rdr(const PencilMatrix& tdr_matrix);

// Whole pipeline for integer polynomials; the zero polynomial maps to the
// 1x1 matrix [0] for every target form.
PencilMatrix represent(const Polynomial& p, const std::vector<std::string>& vars, Form target,
                       bool improved_chain = true);

}  // namespace detrep
