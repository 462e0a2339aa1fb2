#include "detrep/symbolic.hpp"

#include "detrep/error.hpp"

namespace detrep {

Coef Coef::symbol(const std::string& name, Int mult) {
  Coef c;
  if (mult != 0) c.syms_.emplace(name, std::move(mult));
  return c;
}

bool Coef::is_atom() const {
  if (syms_.empty()) return true;
  return num_ == 0 && syms_.size() == 1 && int_abs(syms_.begin()->second) == 1;
}

Coef& Coef::operator+=(const Coef& o) {
  num_ += o.num_;
  for (const auto& [n, k] : o.syms_) {
    auto [it, inserted] = syms_.emplace(n, k);
    if (!inserted) {
      it->second += k;
      if (it->second == 0) syms_.erase(it);
    }
  }
  return *this;
}

Coef Coef::operator*(const Int& k) const {
  Coef r;
  if (k == 0) return r;
  r.num_ = num_ * k;
  for (const auto& [n, c] : syms_) r.syms_.emplace(n, Int(c * k));
  return r;
}

Int Coef::evaluate(const std::map<std::string, Int>& binding) const {
  Int v = num_;
  for (const auto& [n, k] : syms_) {
    auto it = binding.find(n);
    if (it == binding.end()) throw Error("no binding for symbol '" + n + "'");
    v += k * it->second;
  }
  return v;
}

std::string Coef::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, k] : syms_) {
    if (first) {
      if (k == -1)
        out += "-";
      else if (k != 1)
        out += int_str(k) + "*";
    } else {
      out += k < 0 ? " - " : " + ";
      Int a = int_abs(k);
      if (a != 1) out += int_str(a) + "*";
    }
    out += n;
    first = false;
  }
  if (num_ != 0) {
    if (first)
      out += int_str(num_);
    else
      out += (num_ < 0 ? " - " : " + ") + int_str(int_abs(num_));
  }
  return out;
}

bool SymbolicPoly::has_symbols() const {
  for (const auto& t : terms)
    if (!t.coeff.is_integer()) return true;
  return false;
}

std::set<std::string> SymbolicPoly::symbol_names() const {
  std::set<std::string> names;
  for (const auto& t : terms)
    for (const auto& [n, k] : t.coeff.symbols()) names.insert(n);
  return names;
}

Polynomial SymbolicPoly::to_polynomial() const {
  Polynomial p(varcount());
  for (const auto& t : terms) {
    if (!t.coeff.is_integer())
      throw Error("polynomial has symbolic coefficients");
    p.add_term(t.mono, t.coeff.integer_part());
  }
  return p;
}

Int SymbolicPoly::evaluate(const EvalPoint& point,
                           const std::map<std::string, Int>& binding) const {
  if (static_cast<int>(point.size()) != varcount())
    throw Error("evaluation point length does not match variable count");
  Int total = 0;
  for (const auto& t : terms) {
    Int v = t.coeff.evaluate(binding);
    for (const auto& [var, e] : t.mono.factors())
      v *= int_pow(point[static_cast<std::size_t>(var)], e);
    total += v;
  }
  return total;
}

SymbolicPoly symbolic_from_polynomial(const Polynomial& p, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != p.varcount())
    throw Error("variable name list does not match variable count");
  SymbolicPoly sp;
  sp.vars = vars;
  for (const auto& [m, c] : p.terms()) sp.terms.push_back({Coef(c), m});
  return sp;
}

}  // namespace detrep
