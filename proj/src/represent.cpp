#include "detrep/represent.hpp"

#include <cassert>

#include "detrep/error.hpp"

namespace detrep {

PencilMatrix ndr(const ChainForm& cf, const std::vector<std::string>& vars) {
  validate_chain_form(cf);
  if (static_cast<int>(vars.size()) != cf.varcount)
    throw Error("ndr: variable name list does not match chain form");
  const int n = static_cast<int>(cf.size());

  if (n == 1) {
    const auto& e = cf.entries[0];
    PencilMatrix m = PencilMatrix::make(1, Form::Ndr, vars);
    if (e.mono.is_one()) {
      m.at(0, 0).constant = e.coeff;
    } else {  // degree-1 monomial (degree >= 2 would need a successor)
      int v = e.mono.lowest_var();
      m.at(0, 0).add_linear(v, e.coeff);
      m.column_vars[0] = v;
    }
    return m;
  }

  std::vector<Int> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  for (const auto& e : cf.entries) coeffs.push_back(e.coeff);
  IntMatrix A = linear_form_matrix(coeffs);  // (n-1) x n

  PencilMatrix m = PencilMatrix::make(n, Form::Ndr, vars);
  for (int i = 0; i < n; ++i) {
    const auto& e = cf.entries[static_cast<std::size_t>(i)];
    if (e.succ) {
      int j = static_cast<int>(*e.succ);
      int v = *e.succ_var;
      for (int r = 0; r + 1 < n; ++r) {
        m.at(r, i).constant = A.at(r, i);
        m.at(r, i).add_linear(v, Int(-A.at(r, j)));
      }
      // bottom entry m_i - x_v * m_j vanishes
      m.column_vars[static_cast<std::size_t>(i)] = v;
    } else if (e.mono.is_one()) {
      for (int r = 0; r + 1 < n; ++r) m.at(r, i).constant = A.at(r, i);
      m.at(n - 1, i).constant = 1;
    } else {
      int v = e.mono.lowest_var();
      for (int r = 0; r + 1 < n; ++r) m.at(r, i).constant = A.at(r, i);
      m.at(n - 1, i).add_linear(v, 1);
      m.column_vars[static_cast<std::size_t>(i)] = v;
    }
  }
  return m;
}

namespace {

// A + B decomposition of an NDR: constants and per-column variable
// coefficients, with the column variables alongside.
struct SplitPencil {
  IntMatrix A;
  IntMatrix B;
  std::vector<std::optional<int>> colvar;
};

SplitPencil split_ndr(const PencilMatrix& m) {
  SplitPencil s{IntMatrix(m.n, m.n), IntMatrix(m.n, m.n), {}};
  s.colvar.assign(static_cast<std::size_t>(m.n), std::nullopt);
  for (int c = 0; c < m.n; ++c) {
    for (int r = 0; r < m.n; ++r) {
      const auto& e = m.at(r, c);
      s.A.at(r, c) = e.constant;
      if (e.linear.empty()) continue;
      if (e.linear.size() > 1) throw Error("entry carries more than one variable");
      const auto& [v, k] = *e.linear.begin();
      if (s.colvar[static_cast<std::size_t>(c)] && *s.colvar[static_cast<std::size_t>(c)] != v)
        throw Error("column mixes variables; input is not an NDR");
      s.colvar[static_cast<std::size_t>(c)] = v;
      s.B.at(r, c) = k;
    }
  }
  return s;
}

PencilMatrix assemble(const SplitPencil& s, Form form, const std::vector<std::string>& vars) {
  const int n = s.A.rows();
  PencilMatrix m = PencilMatrix::make(n, form, vars);
  for (int c = 0; c < n; ++c) {
    bool any = false;
    for (int r = 0; r < n; ++r) {
      m.at(r, c).constant = s.A.at(r, c);
      if (s.B.at(r, c) != 0) {
        m.at(r, c).add_linear(*s.colvar[static_cast<std::size_t>(c)], s.B.at(r, c));
        any = true;
      }
    }
    if (any) m.column_vars[static_cast<std::size_t>(c)] = s.colvar[static_cast<std::size_t>(c)];
  }
  return m;
}

bool b_row_zero(const IntMatrix& B, int r, int n) {
  for (int c = 0; c < n; ++c)
    if (B.at(r, c) != 0) return false;
  return true;
}

}  // namespace

TdrResult tdr_full(const PencilMatrix& ndr_matrix) {
  if (ndr_matrix.form != Form::Ndr || !is_ndr(ndr_matrix))
    throw Error("tdr: input is not an NDR");
  const int n = ndr_matrix.n;
  SplitPencil s = split_ndr(ndr_matrix);
  IntMatrix W = IntMatrix::identity(n);
  IntMatrix V = IntMatrix::identity(n);
  int sign = 1;

  int i = 0;
  while (i < n) {
    bool rest_zero = true;
    for (int r = i; r < n; ++r) rest_zero &= b_row_zero(s.B, r, n);
    if (rest_zero) break;

    if (b_row_zero(s.B, i, n)) {
      // constant row: rotate it to the bottom (cycle of length n-i)
      s.A.rotate_rows_up(i);
      s.B.rotate_rows_up(i);
      W.rotate_rows_up(i);
      if ((n - i) % 2 == 0) sign = -sign;
      continue;
    }

    // swap the minimal nonzero |coefficient| of row i into column i
    int mcol = -1;
    for (int c = i; c < n; ++c) {
      if (s.B.at(i, c) == 0) continue;
      if (mcol < 0 || int_abs(s.B.at(i, c)) < int_abs(s.B.at(i, mcol))) mcol = c;
    }
    assert(mcol >= 0);
    if (mcol != i) {
      s.A.swap_cols(i, mcol);
      s.B.swap_cols(i, mcol);
      V.swap_cols(i, mcol);
      std::swap(s.colvar[static_cast<std::size_t>(i)], s.colvar[static_cast<std::size_t>(mcol)]);
      sign = -sign;
    }

    // generalized Euclid down column i; the gcd lands at the bottom row
    remainder_exchange(
        i, n - 1, [&](int r) { return s.B.at(r, i); },
        [&](int r, int mrow, const Int& q) {
          s.A.row_axpy(r, mrow, q);
          s.B.row_axpy(r, mrow, q);
          W.row_axpy(r, mrow, q);
        },
        [&](int r1, int r2) {
          s.A.swap_rows(r1, r2);
          s.B.swap_rows(r1, r2);
          W.swap_rows(r1, r2);
          sign = -sign;
        },
        [&](int r) {
          s.A.negate_row(r);
          s.B.negate_row(r);
          W.negate_row(r);
          sign = -sign;
        });
    if (i != n - 1) {
      s.A.swap_rows(i, n - 1);
      s.B.swap_rows(i, n - 1);
      W.swap_rows(i, n - 1);
      sign = -sign;
    }

    // reduce the coefficients above the diagonal modulo the diagonal
    for (int r = 0; r < i; ++r) {
      if (s.B.at(r, i) == 0) continue;
      Int q = s.B.at(r, i) / s.B.at(i, i);  // truncated: |remainder| < |diagonal|
      if (q != 0) {
        s.A.row_axpy(r, i, q);
        s.B.row_axpy(r, i, q);
        W.row_axpy(r, i, q);
      }
    }
    ++i;
  }

  if (sign < 0) {
    s.A.negate_col(0);
    s.B.negate_col(0);
    V.negate_col(0);
  }

#ifndef NDEBUG
  assert(int_abs(determinant(W)) == 1);
  assert(int_abs(determinant(V)) == 1);
#endif

  PencilMatrix out = assemble(s, Form::Tdr, ndr_matrix.vars);
  return {std::move(out), std::move(W), std::move(V)};
}

PencilMatrix tdr(const PencilMatrix& ndr_matrix) { return tdr_full(ndr_matrix).matrix; }

RdrResult rdr_full(const PencilMatrix& tdr_matrix) {
  if (tdr_matrix.form != Form::Tdr || !is_tdr(tdr_matrix))
    throw Error("rdr: input is not a TDR");
  const int n = tdr_matrix.n;
  int kconst = 0;
  while (kconst < n && tdr_matrix.row_is_constant(n - 1 - kconst)) ++kconst;
  if (constant_row_count(tdr_matrix) != kconst)
    throw Error("rdr: constant rows are not at the bottom");

  if (kconst == 0) {
    PencilMatrix out = tdr_matrix;
    out.form = Form::Rdr;
    return {std::move(out), IntMatrix::identity(n), Int(1), 0};
  }

  const int m = n - kconst;
  if (m == 0) {
    // all rows constant: the determinant is a number, keep a 1x1 matrix
    IntMatrix cm(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) cm.at(r, c) = tdr_matrix.at(r, c).constant;
    PencilMatrix out = PencilMatrix::make(1, Form::Rdr, tdr_matrix.vars);
    out.at(0, 0).constant = determinant(cm);
    return {std::move(out), IntMatrix::identity(n), Int(1), kconst};
  }

  std::vector<std::vector<AffineEntry>> work = tdr_matrix.entries;
  IntMatrix V = IntMatrix::identity(n);
  int sign = 1;
  auto col_axpy = [&](int a, int b, const Int& q) {
    for (int r = 0; r < n; ++r)
      work[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] -=
          work[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)] * q;
    V.col_axpy(a, b, q);
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < n; ++r)
      std::swap(work[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                work[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
    V.swap_cols(a, b);
    sign = -sign;
  };
  auto col_negate = [&](int a) {
    for (int r = 0; r < n; ++r)
      work[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] =
          work[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] * Int(-1);
    V.negate_col(a);
    sign = -sign;
  };

  // bottom row first: zero the leading segment of each constant row, leaving
  // a positive pivot on the diagonal of the trailing block
  for (int r = n - 1; r >= m; --r) {
    bool all_zero = true;
    for (int c = 0; c <= r; ++c)
      all_zero &= (work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].constant == 0);
    if (all_zero) throw Error("rdr: constant block is singular");
    remainder_exchange(
        0, r,
        [&](int c) { return work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].constant; },
        [&](int c, int mc, const Int& q) { col_axpy(c, mc, q); },
        [&](int c1, int c2) { col_swap(c1, c2); },
        [&](int c) { col_negate(c); });
  }

  Int d = 1;
  for (int r = m; r < n; ++r) d *= work[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)].constant;

#ifndef NDEBUG
  assert(int_abs(determinant(V)) == 1);
#endif

  PencilMatrix out = PencilMatrix::make(m, Form::Rdr, tdr_matrix.vars);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) out.at(r, c) = work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  Int scale = sign < 0 ? Int(-d) : d;
  for (int c = 0; c < m; ++c) out.at(0, c) = out.at(0, c) * scale;
  return {std::move(out), std::move(V), std::move(d), kconst};
}

PencilMatrix rdr(const PencilMatrix& tdr_matrix) { return rdr_full(tdr_matrix).matrix; }

PencilMatrix represent(const Polynomial& p, const std::vector<std::string>& vars, Form target,
                       bool improved_chain) {
  if (target != Form::Ndr && target != Form::Tdr && target != Form::Rdr)
    throw Error("represent: target must be NDR, TDR or RDR");
  if (p.is_zero()) {
    PencilMatrix m = PencilMatrix::make(1, target, vars);
    return m;
  }
  ChainForm cf = improved_chain ? improved_chain_form(p) : chain_form(p);
  PencilMatrix m = ndr(cf, vars);
  if (target == Form::Ndr) return m;
  m = tdr(m);
  if (target == Form::Tdr) return m;
  return rdr(m);
}

}  // namespace detrep
