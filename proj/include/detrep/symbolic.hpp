#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "detrep/bigint.hpp"
#include "detrep/monomial.hpp"
#include "detrep/polynomial.hpp"

namespace detrep {

// Exact scalar of the form  n + sum_i k_i * name_i  with integer n, k_i.
// Plain integers are the common case; named parts appear when polynomial
// coefficients are kept symbolic.
class Coef {
 public:
  Coef() : num_(0) {}
  Coef(Int n) : num_(std::move(n)) {}  // NOLINT: implicit by design
  static Coef symbol(const std::string& name, Int mult = 1);

  bool is_zero() const { return num_ == 0 && syms_.empty(); }
  bool is_integer() const { return syms_.empty(); }
  const Int& integer_part() const { return num_; }
  const std::map<std::string, Int>& symbols() const { return syms_; }

  // true when the scalar is a lone integer or a lone +/-1 * name
  bool is_atom() const;

  Coef& operator+=(const Coef& o);
  Coef operator*(const Int& k) const;
  Coef operator-() const { return *this * Int(-1); }
  bool operator==(const Coef& o) const = default;

  Int evaluate(const std::map<std::string, Int>& binding) const;
  std::string str() const;

 private:
  Int num_;
  std::map<std::string, Int> syms_;
};

struct SymbolicTerm {
  Coef coeff;
  Monomial mono;
};

// Polynomial whose coefficients may be symbolic names; terms are kept as a
// plain list (only integer-coefficient duplicates are ever combined, and only
// when converting to Polynomial).
struct SymbolicPoly {
  std::vector<std::string> vars;
  std::vector<SymbolicTerm> terms;

  int varcount() const { return static_cast<int>(vars.size()); }
  bool has_symbols() const;
  std::set<std::string> symbol_names() const;
  Polynomial to_polynomial() const;  // throws when symbols are present
  Int evaluate(const EvalPoint& point, const std::map<std::string, Int>& binding) const;
};

SymbolicPoly symbolic_from_polynomial(const Polynomial& p, const std::vector<std::string>& vars);

}  // namespace detrep
