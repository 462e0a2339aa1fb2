#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detrep/error.hpp"
#include "detrep/parse.hpp"
#include "detrep/poly_io.hpp"
#include "detrep/polynomial.hpp"
#include "test_util.hpp"

using namespace detrep;
using dtt::make_vars;

TEST_CASE("parse basic forms") {
  auto r = parse_polynomial("2*x1 - 7*x2 + 4*x3");
  CHECK(r.vars == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(r.poly.term_count() == 3);
  CHECK(r.poly.coefficient(Monomial::variable(0)) == 2);
  CHECK(r.poly.coefficient(Monomial::variable(1)) == -7);
  CHECK(r.poly.coefficient(Monomial::variable(2)) == 4);

  auto z = parse_polynomial("0");
  CHECK(z.poly.is_zero());

  auto q = parse_polynomial("x1^2 + 2*x1*x2 + x2^2");
  CHECK(q.poly.term_count() == 3);
  CHECK(q.poly.degree() == 2);
}

TEST_CASE("parse implicit products, weird whitespace, like terms") {
  auto r = parse_polynomial("  2x1  +3 * x1 -x1 ");
  CHECK(r.poly == Polynomial::term(1, 4, Monomial::variable(0)));

  auto s = parse_polynomial("x^2*y - x*x*y");  // same monomial spelled twice
  CHECK(s.poly.is_zero());

  auto big = parse_polynomial("123456789012345678901234567890*z");
  CHECK(big.poly.leading_term().second == Int("123456789012345678901234567890"));

  auto e0 = parse_polynomial("x1^0 + 1");
  CHECK(e0.poly == Polynomial::constant(1, 2));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2*"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 & x2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^-2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[c]*x1"), ParseError);  // symbols not allowed here
  try {
    parse_polynomial("x1 + @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("var_order fixes indices and rejects unknown names") {
  auto r = parse_polynomial("y + x", std::vector<std::string>{"x", "y", "z"});
  CHECK(r.poly.coefficient(Monomial::variable(0)) == 1);
  CHECK(r.poly.coefficient(Monomial::variable(1)) == 1);
  CHECK(r.vars.size() == 3);
  CHECK_THROWS_AS(parse_polynomial("w", std::vector<std::string>{"x"}), ParseError);
}

TEST_CASE("evaluate") {
  Polynomial p = dtt::P("x1^2 + 2*x1*x2 + x2^2", 2);
  CHECK(p.evaluate({Int(1), Int(1)}) == 4);
  CHECK(Polynomial(3).evaluate({Int(5), Int(6), Int(7)}) == 0);
  Polynomial q = dtt::P("2*x1 - 7*x2 + 4*x3", 3);
  CHECK(q.evaluate({Int(3), Int(1), Int(1)}) == 3);
  CHECK_THROWS_AS(q.evaluate({Int(1)}), Error);
}

TEST_CASE("evaluate is a ring homomorphism at random points") {
  dtt::RandomPoly gen(101);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 40; ++it) {
    Polynomial p = gen.next(nullptr, false);
    Polynomial q(p.varcount());
    {
      dtt::RandomPoly gen2(rng());
      int k = 0;
      do {
        q = gen2.next(&k, false);
      } while (k != p.varcount());
    }
    EvalPoint pt;
    for (int i = 0; i < p.varcount(); ++i) pt.push_back(Int(static_cast<long>(rng() % 2001) - 1000));
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  }
}

TEST_CASE("substitute_linear") {
  // x4*x1 with x4 -> 5*x1 becomes 5*x1^2
  Polynomial p = dtt::P("x4*x1", 4);
  std::map<int, LinearBinding> b{{3, {Int(5), 0}}};
  CHECK(p.substitute_linear(b) == dtt::P("5*x1^2", 4));

  // identity binding
  std::map<int, LinearBinding> id{{3, {Int(1), 3}}};
  CHECK(p.substitute_linear(id) == p);

  // constants: x10 -> 3, x11 -> 4
  Polynomial q = dtt::P("x10 + x11", 11);
  std::map<int, LinearBinding> c{{9, {Int(3), std::nullopt}}, {10, {Int(4), std::nullopt}}};
  CHECK(q.substitute_linear(c) == Polynomial::constant(11, 7));

  std::map<int, LinearBinding> bad{{12, {Int(1), std::nullopt}}};
  CHECK_THROWS_AS(q.substitute_linear(bad), Error);
}

TEST_CASE("substitute_linear commutes with evaluation") {
  dtt::RandomPoly gen(2020);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    int k = 0;
    Polynomial p = gen.next(&k, false);
    int from = static_cast<int>(rng() % static_cast<unsigned>(k));
    int to = static_cast<int>(rng() % static_cast<unsigned>(k));
    Int scale(static_cast<long>(rng() % 9) - 4);
    std::map<int, LinearBinding> b{{from, {scale, to}}};
    EvalPoint pt;
    for (int i = 0; i < k; ++i) pt.push_back(Int(static_cast<long>(rng() % 201) - 100));
    EvalPoint bound = pt;
    bound[static_cast<std::size_t>(from)] = scale * pt[static_cast<std::size_t>(to)];
    CHECK(p.substitute_linear(b).evaluate(pt) == p.evaluate(bound));
  }
}

TEST_CASE("canonical text round-trips") {
  dtt::RandomPoly gen(314);
  for (int it = 0; it < 60; ++it) {
    int k = 0;
    Polynomial p = gen.next(&k, false);
    auto vars = make_vars(k);
    auto back = parse_polynomial(polynomial_text(p, vars), vars);
    CHECK(back.poly == p);
  }
  CHECK(polynomial_text(Polynomial(2), make_vars(2)) == "0");
  CHECK(polynomial_text(dtt::P("2*x1-7*x2+4*x3", 3), make_vars(3)) == "2*x1 - 7*x2 + 4*x3");
}

TEST_CASE("json and latex output") {
  Polynomial p = dtt::P("x1^2 - 7*x2", 2);
  CHECK(polynomial_json(p, make_vars(2)) ==
        R"({"terms":[{"coeff":"1","exps":[2,0]},{"coeff":"-7","exps":[0,1]}],"vars":["x1","x2"]})");
  CHECK(polynomial_latex(p, make_vars(2)) == "x_{1}^{2} - 7x_{2}");
}
