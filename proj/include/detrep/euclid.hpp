#pragma once

#include <functional>
#include <vector>

#include "detrep/bigint.hpp"
#include "detrep/int_matrix.hpp"

namespace detrep {

// Unimodular column transformation produced by the generalized Euclidean
// algorithm; parity is the determinant of forward (+1 or -1).
struct UnimodularWitness {
  IntMatrix forward;
  int parity = 1;
};

struct GcdReduction {
  Int g;  // positive gcd
  UnimodularWitness witness;
};

// Remainder-exchange pass over positions [lo, hi] of an abstract integer
// sequence. get(i) reads the current value; shear(i, m, q) must realize
// value[i] -= q * value[m]; swap / negate likewise act on the caller's state.
// Afterwards every position except hi holds 0 and position hi holds the
// positive gcd of the original values. At least one value must be nonzero.
void remainder_exchange(int lo, int hi, const std::function<Int(int)>& get,
                        const std::function<void(int, int, const Int&)>& shear,
                        const std::function<void(int, int)>& swap,
                        const std::function<void(int)>& negate);

// Reduce a row vector to (0, ..., 0, g) by right-multiplication with a
// unimodular matrix: a * M.forward = (0, ..., 0, g), g = gcd > 0.
// Throws on an empty or all-zero vector.
GcdReduction gcd_row_reduce(const std::vector<Int>& a);

// Force det(forward) = +1 by negating the first column when parity is -1.
UnimodularWitness normalize_sign(UnimodularWitness w);

// First n-1 rows of M^-1 where a * M = (0,...,0,1): stacking the result over
// the row a gives an n x n matrix with determinant exactly +1.
// Requires gcd(a) = 1 and n >= 2.
IntMatrix solve_unit_determinant(const std::vector<Int>& a);

// (n-1) x n integer matrix A such that det [A; x_1 ... x_n] = sum a_i x_i,
// exactly. Requires a nonzero and n >= 2; when gcd(a) = g > 1 the first row
// is scaled by g.
IntMatrix linear_form_matrix(const std::vector<Int>& a);

}  // namespace detrep
