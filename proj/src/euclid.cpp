#include "detrep/euclid.hpp"

#include "detrep/error.hpp"

namespace detrep {

// Minimum-remainder exchange: repeatedly reduce every entry modulo the
// current minimum (in absolute value); a nonzero remainder becomes the new
// minimum and the scan restarts. When a single nonzero entry survives it is
// made positive and moved to the last position.
void remainder_exchange(int lo, int hi, const std::function<Int(int)>& get,
                        const std::function<void(int, int, const Int&)>& shear,
                        const std::function<void(int, int)>& swap,
                        const std::function<void(int)>& negate) {
  int m = -1;
  for (int i = lo; i <= hi; ++i) {
    if (get(i) == 0) continue;
    if (m < 0 || int_abs(get(i)) < int_abs(get(m))) m = i;
  }
  if (m < 0) throw Error("remainder exchange on all-zero input");

  for (;;) {
    bool restarted = false;
    for (int i = lo; i <= hi; ++i) {
      if (i == m || get(i) == 0) continue;
      Int r = floor_mod(get(i), get(m));
      Int q = (get(i) - r) / get(m);
      shear(i, m, q);
      if (r != 0) {  // r < |old minimum|, so it is the new minimum
        m = i;
        restarted = true;
        break;
      }
    }
    if (!restarted) break;
  }
  if (get(m) < 0) negate(m);
  if (m != hi) swap(m, hi);
}

GcdReduction gcd_row_reduce(const std::vector<Int>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw Error("gcd_row_reduce: empty vector");
  bool nonzero = false;
  for (const Int& v : a) nonzero |= (v != 0);
  if (!nonzero) throw Error("gcd_row_reduce: all-zero vector");

  std::vector<Int> cur = a;
  IntMatrix M = IntMatrix::identity(n);
  int parity = 1;
  remainder_exchange(
      0, n - 1, [&](int i) { return cur[static_cast<std::size_t>(i)]; },
      [&](int i, int m, const Int& q) {
        cur[static_cast<std::size_t>(i)] -= q * cur[static_cast<std::size_t>(m)];
        M.col_axpy(i, m, q);
      },
      [&](int i, int j) {
        std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(j)]);
        M.swap_cols(i, j);
        parity = -parity;
      },
      [&](int i) {
        cur[static_cast<std::size_t>(i)] = -cur[static_cast<std::size_t>(i)];
        M.negate_col(i);
        parity = -parity;
      });
  return {cur[static_cast<std::size_t>(n - 1)], {std::move(M), parity}};
}

UnimodularWitness normalize_sign(UnimodularWitness w) {
  if (w.parity == -1) {
    w.forward.negate_col(0);
    w.parity = 1;
  }
  return w;
}

namespace {

Int vector_gcd(const std::vector<Int>& a) {
  Int g = 0;
  for (const Int& v : a) g = int_gcd(g, v);
  return g;
}

}  // namespace

IntMatrix solve_unit_determinant(const std::vector<Int>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw Error("solve_unit_determinant: need at least two entries");
  if (vector_gcd(a) != 1) throw Error("solve_unit_determinant: gcd of entries must be 1");
  UnimodularWitness w = normalize_sign(gcd_row_reduce(a).witness);
  IntMatrix inv = invert_unimodular(w.forward);
  IntMatrix b(n - 1, n);
  for (int r = 0; r + 1 < n; ++r)
    for (int c = 0; c < n; ++c) b.at(r, c) = inv.at(r, c);
  return b;
}

IntMatrix linear_form_matrix(const std::vector<Int>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw Error("linear_form_matrix: need at least two entries");
  Int g = vector_gcd(a);
  if (g == 0) throw Error("linear_form_matrix: all-zero vector");
  std::vector<Int> reduced = a;
  if (g != 1)
    for (Int& v : reduced) v /= g;
  UnimodularWitness w = normalize_sign(gcd_row_reduce(reduced).witness);
  // first n-1 rows of M^T
  IntMatrix A(n - 1, n);
  for (int r = 0; r + 1 < n; ++r)
    for (int c = 0; c < n; ++c) A.at(r, c) = w.forward.at(c, r);
  if (g != 1)
    for (int c = 0; c < n; ++c) A.at(0, c) *= g;
  return A;
}

}  // namespace detrep
