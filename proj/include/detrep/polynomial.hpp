#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "detrep/bigint.hpp"
#include "detrep/monomial.hpp"

namespace detrep {

using EvalPoint = std::vector<Int>;

// Replacement of one variable by scale * x_var, or by the constant scale when
// var is absent.
struct LinearBinding {
  Int scale;
  std::optional<int> var;
};

// Sparse multivariate polynomial with exact integer coefficients over a fixed
// number of variables. Terms are kept in canonical (graded-lex descending)
// order; no zero coefficients are stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, MonomialOrder>;

  explicit Polynomial(int varcount = 0);
  static Polynomial constant(int varcount, Int c);
  static Polynomial term(int varcount, Int c, const Monomial& m);

  int varcount() const { return varcount_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;
  bool has_term(const Monomial& m) const { return terms_.count(m) != 0; }
  std::pair<Monomial, Int> leading_term() const;

  void add_term(const Monomial& m, const Int& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Int& c) const;
  bool operator==(const Polynomial& o) const = default;

  Int evaluate(const EvalPoint& point) const;
  Polynomial substitute_linear(const std::map<int, LinearBinding>& bindings) const;

  // Exact division; throws when the divisor does not divide *this exactly.
  Polynomial divided_exact(const Polynomial& divisor) const;

 private:
  int varcount_;
  TermMap terms_;
};

}  // namespace detrep
