#include "detrep/poly_io.hpp"

#include <cctype>

#include <json.hpp>

namespace detrep {

void TermStream::add(bool negative, const std::string& body) {
  if (first_) {
    if (negative) out_ += "-";
    out_ += body;
    first_ = false;
  } else {
    out_ += negative ? " - " : " + ";
    out_ += body;
  }
}

std::string TermStream::str(const std::string& when_empty) const {
  return first_ ? when_empty : out_;
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += vars.at(static_cast<std::size_t>(v));
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

std::string latex_name(const std::string& name) {
  // split a trailing digit run into a subscript: x12 -> x_{12}
  std::size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  if (i == 0 || i == name.size()) return name;
  return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

}  // namespace

std::string monomial_latex(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    out += latex_name(vars.at(static_cast<std::size_t>(v)));
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string polynomial_text(const Polynomial& p, const std::vector<std::string>& vars) {
  TermStream ts;
  for (const auto& [m, c] : p.terms()) {
    Int a = int_abs(c);
    std::string body;
    if (m.is_one())
      body = int_str(a);
    else if (a == 1)
      body = monomial_text(m, vars);
    else
      body = int_str(a) + "*" + monomial_text(m, vars);
    ts.add(c < 0, body);
  }
  return ts.str();
}

std::string polynomial_latex(const Polynomial& p, const std::vector<std::string>& vars) {
  TermStream ts;
  for (const auto& [m, c] : p.terms()) {
    Int a = int_abs(c);
    std::string body;
    if (m.is_one())
      body = int_str(a);
    else if (a == 1)
      body = monomial_latex(m, vars);
    else
      body = int_str(a) + monomial_latex(m, vars);
    ts.add(c < 0, body);
  }
  return ts.str();
}

std::string polynomial_json(const Polynomial& p, const std::vector<std::string>& vars) {
  nlohmann::json j;
  j["vars"] = vars;
  auto terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json t;
    t["coeff"] = int_str(c);
    t["exps"] = m.dense_exponents(p.varcount());
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

std::string symbolic_polynomial_text(const SymbolicPoly& p) {
  TermStream ts;
  for (const auto& t : p.terms) {
    std::string c = t.coeff.str();
    bool neg = false;
    if (!c.empty() && c[0] == '-' && t.coeff.is_atom()) {
      neg = true;
      c = c.substr(1);
    }
    std::string body;
    if (t.mono.is_one())
      body = t.coeff.is_atom() ? c : "(" + c + ")";
    else if (c == "1" && t.coeff.is_integer())
      body = monomial_text(t.mono, p.vars);
    else
      body = (t.coeff.is_atom() ? c : "(" + c + ")") + "*" + monomial_text(t.mono, p.vars);
    ts.add(neg, body);
  }
  return ts.str();
}

}  // namespace detrep
