#pragma once

#include <string>
#include <vector>

#include "detrep/polynomial.hpp"
#include "detrep/symbolic.hpp"

namespace detrep {

// Streams "+/-" separated pieces: leading piece keeps only a bare minus.
class TermStream {
 public:
  void add(bool negative, const std::string& body);
  bool empty() const { return first_; }
  std::string str(const std::string& when_empty = "0") const;

 private:
  bool first_ = true;
  std::string out_;
};

// "x1^2" / "x1*x2" factor list in input syntax
std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars);
// "x_1^2x_2" factor list for LaTeX
std::string monomial_latex(const Monomial& m, const std::vector<std::string>& vars);

std::string polynomial_text(const Polynomial& p, const std::vector<std::string>& vars);
std::string polynomial_latex(const Polynomial& p, const std::vector<std::string>& vars);
std::string polynomial_json(const Polynomial& p, const std::vector<std::string>& vars);

std::string symbolic_polynomial_text(const SymbolicPoly& p);

}  // namespace detrep
