#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detrep/error.hpp"
#include "detrep/pencil.hpp"
#include "detrep/poly_io.hpp"
#include "test_util.hpp"

using namespace detrep;
using dtt::P;
using dtt::make_vars;
using dtt::pencil_from_strings;

namespace {

PencilMatrix random_affine_pencil(std::mt19937_64& rng, int n, int varcount) {
  PencilMatrix m = PencilMatrix::make(n, Form::Raw, make_vars(varcount));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m.at(r, c).constant = Int(static_cast<long>(rng() % 11) - 5);
      for (int v = 0; v < varcount; ++v)
        if (rng() % 3 == 0) m.at(r, c).add_linear(v, Int(static_cast<long>(rng() % 7) - 3));
    }
  return m;
}

}  // namespace

TEST_CASE("symbolic determinant small cases") {
  auto one = pencil_from_strings(Form::Raw, make_vars(1), {{"x1"}});
  CHECK(symbolic_determinant(one) == P("x1", 1));

  auto two = pencil_from_strings(Form::Raw, make_vars(2), {{"x1", "1"}, {"1", "x2"}});
  CHECK(symbolic_determinant(two) == P("x1*x2 - 1", 2));
}

TEST_CASE("printed 6x6 matrix for the squared binomial") {
  auto n = pencil_from_strings(Form::Ndr, make_vars(2),
                               {{"-1", "0", "0", "0", "1", "0"},
                                {"-x1", "1", "0", "0", "0", "0"},
                                {"0", "0", "1", "0", "-2", "0"},
                                {"0", "0", "-x1", "1", "0", "0"},
                                {"0", "0", "0", "0", "-x2", "1"},
                                {"0", "x1", "0", "x2", "0", "x2"}});
  CHECK(symbolic_determinant(n) == P("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK(is_ndr(n));
}

TEST_CASE("symbolic determinant agrees with the permutation-sum oracle") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 40; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % 3);
    PencilMatrix m = random_affine_pencil(rng, n, k);
    CHECK(symbolic_determinant(m) == dtt::leibniz_det_pencil(m));
  }
}

TEST_CASE("all-constant pencils match the integer determinant") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 20; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    PencilMatrix m = PencilMatrix::make(n, Form::Raw, {});
    IntMatrix im(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Int v(static_cast<long>(rng() % 19) - 9);
        m.at(r, c).constant = v;
        im.at(r, c) = v;
      }
    CHECK(symbolic_determinant(m) == Polynomial::constant(0, determinant(im)));
  }
}

TEST_CASE("eval_determinant_check") {
  std::mt19937_64 rng(5150);
  PencilMatrix m = random_affine_pencil(rng, 5, 3);
  Polynomial p = symbolic_determinant(m);
  CHECK(eval_determinant_check(m, p, 20, 0));

  // perturbing one constant must be caught
  m.at(2, 3).constant += 1;
  CHECK_FALSE(eval_determinant_check(m, p, 20, 0));
  CHECK_THROWS_AS(eval_determinant_check(m, p, 0, 0), Error);
}

TEST_CASE("printed 6x6 reduced matrix passes the evaluation check") {
  Polynomial p = P("3*x1^3*x2^2 - 4*x1^2*x2^3 + x1^2*x2^2 - 5*x1*x2^2 + 2*x1^3 + 2*x1*x2", 2);
  auto r = pencil_from_strings(Form::Rdr, make_vars(2),
                               {{"3*x1 - 4*x2 + 1", "1", "0", "0", "0", "0"},
                                {"5", "x1", "0", "0", "0", "1"},
                                {"-2*x1", "0", "0", "-1", "0", "0"},
                                {"0", "0", "-x2", "x1", "-1", "0"},
                                {"0", "0", "0", "0", "x1", "0"},
                                {"-2", "0", "1", "0", "0", "-x2"}});
  CHECK(eval_determinant_check(r, p, 20, 0));
  CHECK(symbolic_determinant(r) == p);
}

TEST_CASE("ndr and tdr predicates") {
  // NDR: one variable per column
  auto good = pencil_from_strings(Form::Ndr, make_vars(2), {{"x1", "1"}, {"2", "x2"}});
  CHECK(is_ndr(good));
  auto mixed = pencil_from_strings(Form::Raw, make_vars(2), {{"x1", "x2"}, {"x2", "1"}});
  CHECK_FALSE(is_ndr(mixed));  // column 1 carries x1 and x2

  // TDR conditions: diagonal variable coefficients, constants below, reduced above
  auto t = pencil_from_strings(Form::Tdr, make_vars(2), {{"2*x1 + 1", "x2 - 1"}, {"3", "2*x2"}});
  CHECK(is_tdr(t));
  auto t_bad_above =
      pencil_from_strings(Form::Tdr, make_vars(2), {{"2*x1 + 1", "3*x2"}, {"3", "2*x2"}});
  CHECK_FALSE(is_tdr(t_bad_above));  // |3| >= |2| above the diagonal
  auto t_bad_below =
      pencil_from_strings(Form::Tdr, make_vars(2), {{"2*x1 + 1", "0"}, {"x1", "2*x2"}});
  CHECK_FALSE(is_tdr(t_bad_below));  // variable below the diagonal
  auto t_const_middle = pencil_from_strings(
      Form::Tdr, make_vars(1), {{"x1", "1", "0"}, {"1", "2", "3"}, {"0", "x1", "1"}});
  CHECK_FALSE(is_tdr(t_const_middle));  // constant row above a variable row

  // trivially triangular: all-constant matrix (k = 0)
  auto c = pencil_from_strings(Form::Tdr, make_vars(1), {{"7"}});
  CHECK(is_tdr(c));
  CHECK(constant_row_count(c) == 1);
}

TEST_CASE("pencil json round-trip") {
  auto n = pencil_from_strings(Form::Ndr, make_vars(2),
                               {{"-1", "0", "1"}, {"-x1", "1", "0"}, {"0", "x1", "x2"}});
  PencilMatrix back = pencil_from_json(pencil_json(n));
  CHECK(back.n == n.n);
  CHECK(back.form == n.form);
  CHECK(back.vars == n.vars);
  for (int r = 0; r < n.n; ++r)
    for (int c = 0; c < n.n; ++c) CHECK(back.at(r, c) == n.at(r, c));
  CHECK(symbolic_determinant(back) == symbolic_determinant(n));
}

TEST_CASE("pencil text and latex render") {
  auto m = pencil_from_strings(Form::Raw, make_vars(2), {{"x1 - 1", "2"}, {"0", "-3*x2"}});
  CHECK(pencil_text(m) == "[ x1 - 1      2 ]\n[      0  -3*x2 ]\n");
  CHECK(pencil_latex(m) == "\\begin{bmatrix}\nx_{1} - 1 & 2 \\\\\n0 & -3x_{2}\n\\end{bmatrix}\n");
}
