#include "detrep/polynomial.hpp"

#include "detrep/error.hpp"

namespace detrep {

Polynomial::Polynomial(int varcount) : varcount_(varcount) {
  if (varcount < 0) throw Error("negative variable count");
}

Polynomial Polynomial::constant(int varcount, Int c) {
  Polynomial p(varcount);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::term(int varcount, Int c, const Monomial& m) {
  Polynomial p(varcount);
  p.add_term(m, c);
  return p;
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

std::pair<Monomial, Int> Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  if (m.highest_var() >= varcount_)
    throw Error("monomial variable index exceeds variable count");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Int(-c));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(varcount_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, Int(-c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(varcount_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Int& c) const {
  Polynomial r(varcount_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, Int(k * c));
  return r;
}

Int Polynomial::evaluate(const EvalPoint& point) const {
  if (static_cast<int>(point.size()) != varcount_)
    throw Error("evaluation point length does not match variable count");
  Int total = 0;
  for (const auto& [m, c] : terms_) {
    Int v = c;
    for (const auto& [var, e] : m.factors())
      v *= int_pow(point[static_cast<std::size_t>(var)], e);
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute_linear(const std::map<int, LinearBinding>& bindings) const {
  for (const auto& [v, b] : bindings) {
    if (v < 0 || v >= varcount_) throw Error("binding for variable index out of range");
    if (b.var && (*b.var < 0 || *b.var >= varcount_))
      throw Error("binding target variable index out of range");
  }
  Polynomial r(varcount_);
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    Int mult = c;
    for (const auto& [var, e] : m.factors()) {
      auto it = bindings.find(var);
      if (it == bindings.end()) {
        for (Monomial::Exp k = 0; k < e; ++k) nm = nm.times_var(var);
        continue;
      }
      mult *= int_pow(it->second.scale, e);
      if (it->second.var)
        for (Monomial::Exp k = 0; k < e; ++k) nm = nm.times_var(*it->second.var);
    }
    r.add_term(nm, mult);
  }
  return r;
}

Polynomial Polynomial::divided_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quot(varcount_);
  const auto& [dm, dc] = *divisor.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    auto qm = rm.divided_by(dm);
    if (!qm) throw Error("inexact polynomial division (monomial)");
    Int qc = rc / dc;
    if (qc * dc != rc) throw Error("inexact polynomial division (coefficient)");
    Polynomial piece = Polynomial::term(varcount_, qc, *qm);
    quot += piece;
    rem -= piece * divisor;
  }
  return quot;
}

}  // namespace detrep
