#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detrep/polynomial.hpp"
#include "detrep/symbolic.hpp"

namespace detrep {

// Grammar (whitespace insignificant):
//   poly  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff? ('*'? var ('^' nonneg)?)*        at least one of coeff/vars
//   coeff := integer | '[' name ']'                  bracketed = symbolic name
//   var   := [A-Za-z_][A-Za-z0-9_]*
// Variables are indexed by first appearance unless var_order is given, in
// which case every name must come from that list.

struct ParsedPolynomial {
  Polynomial poly;
  std::vector<std::string> vars;
};

ParsedPolynomial parse_polynomial(
    std::string_view text,
    const std::optional<std::vector<std::string>>& var_order = std::nullopt);

SymbolicPoly parse_symbolic_polynomial(
    std::string_view text,
    const std::optional<std::vector<std::string>>& var_order = std::nullopt);

}  // namespace detrep
