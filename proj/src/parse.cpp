#include "detrep/parse.hpp"

#include <cctype>
#include <map>

#include "detrep/error.hpp"

namespace detrep {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::vector<std::string>>& var_order,
         bool allow_symbols)
      : s_(text), allow_symbols_(allow_symbols) {
    if (var_order) {
      fixed_vars_ = true;
      for (const auto& name : *var_order) {
        if (var_index_.count(name)) throw Error("duplicate variable name in var_order");
        var_index_.emplace(name, static_cast<int>(vars_.size()));
        vars_.push_back(name);
      }
    }
  }

  SymbolicPoly run() {
    skip_ws();
    int sign = read_sign_opt();
    read_term(sign);
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      read_term(c == '-' ? -1 : 1);
    }
    SymbolicPoly out;
    out.vars = std::move(vars_);
    out.terms = std::move(terms_);
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool at_ident_start() const {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  int read_sign_opt() {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
      return s_[pos_++] == '-' ? -1 : 1;
    return 1;
  }

  std::string read_ident() {
    if (!at_ident_start()) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  Int read_integer() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(std::string(s_.substr(start, pos_ - start)), 10);
  }

  int var_id(const std::string& name) {
    auto it = var_index_.find(name);
    if (it != var_index_.end()) return it->second;
    if (fixed_vars_) fail("unknown variable '" + name + "'");
    int id = static_cast<int>(vars_.size());
    var_index_.emplace(name, id);
    vars_.push_back(name);
    return id;
  }

  void read_term(int sign) {
    skip_ws();
    Coef coeff(Int(1));
    bool have_any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = Coef(read_integer());
      have_any = true;
    } else if (pos_ < s_.size() && s_[pos_] == '[') {
      if (!allow_symbols_) fail("symbolic coefficients are not allowed here");
      ++pos_;
      skip_ws();
      std::string name = read_ident();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
      ++pos_;
      coeff = Coef::symbol(name);
      have_any = true;
    }

    Monomial mono;
    for (;;) {
      skip_ws();
      bool after_star = false;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        after_star = true;
      }
      if (!at_ident_start()) {
        if (after_star) fail("expected variable after '*'");
        break;
      }
      std::string name = read_ident();
      int v = var_id(name);
      unsigned long e = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-')
          fail("exponent must be a non-negative integer");
        Int big = read_integer();
        if (big > 1000000) fail("exponent too large");
        e = big.get_ui();
      }
      for (unsigned long k = 0; k < e; ++k) mono = mono.times_var(v);
      have_any = true;
    }
    if (!have_any) fail("expected term");
    terms_.push_back({coeff * Int(sign), mono});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool allow_symbols_;
  bool fixed_vars_ = false;
  std::map<std::string, int> var_index_;
  std::vector<std::string> vars_;
  std::vector<SymbolicTerm> terms_;
};

}  // namespace

SymbolicPoly parse_symbolic_polynomial(std::string_view text,
                                       const std::optional<std::vector<std::string>>& var_order) {
  return Parser(text, var_order, true).run();
}

ParsedPolynomial parse_polynomial(std::string_view text,
                                  const std::optional<std::vector<std::string>>& var_order) {
  SymbolicPoly sp = Parser(text, var_order, false).run();
  return {sp.to_polynomial(), std::move(sp.vars)};
}

}  // namespace detrep
