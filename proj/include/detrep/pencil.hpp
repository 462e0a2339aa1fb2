#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detrep/int_matrix.hpp"
#include "detrep/polynomial.hpp"

namespace detrep {

enum class Form { Raw, Ndr, Tdr, Rdr, Udr };

std::string form_name(Form f);
Form form_from_name(const std::string& name);

// constant + sum of coeff * x_var; no zero linear coefficients are stored
struct AffineEntry {
  Int constant{};
  std::map<int, Int> linear;

  bool is_constant() const { return linear.empty(); }
  void add_linear(int var, const Int& coeff);
  AffineEntry& operator+=(const AffineEntry& o);
  AffineEntry operator*(const Int& k) const;
  AffineEntry& operator-=(const AffineEntry& o);
  bool operator==(const AffineEntry& o) const = default;

  Int evaluate(const EvalPoint& point) const;
  Polynomial to_polynomial(int varcount) const;
  static AffineEntry from_polynomial(const Polynomial& p);  // throws when degree > 1
};

// Square matrix of affine entries plus form metadata. column_vars records,
// per column, the single variable an NDR/TDR column is allowed to carry.
struct PencilMatrix {
  int n = 0;
  Form form = Form::Raw;
  std::vector<std::string> vars;
  std::vector<std::vector<AffineEntry>> entries;
  std::vector<std::optional<int>> column_vars;

  static PencilMatrix make(int n, Form form, std::vector<std::string> vars);
  AffineEntry& at(int r, int c) { return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const AffineEntry& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  int varcount() const { return static_cast<int>(vars.size()); }
  bool row_is_constant(int r) const;
  IntMatrix evaluate(const EvalPoint& point) const;
};

// Exact symbolic determinant: cofactor expansion for n <= 4, fraction-free
// (Bareiss) elimination over the polynomial ring above that.
Polynomial symbolic_determinant(const PencilMatrix& m);

// Randomized check det(M(pt)) == p(pt) over `trials` points with coordinates
// uniform in [-10^6, 10^6], drawn deterministically from seed. Every
// determinant is computed by exact integer elimination.
bool eval_determinant_check(const PencilMatrix& m, const Polynomial& p, int trials,
                            std::uint64_t seed);

// Per-column single-variable predicate (the NDR shape).
bool is_ndr(const PencilMatrix& m);

// Definition-4 predicate set on top of the NDR shape: leading diagonal
// variable coefficients nonzero up to some k, all-constant rows after k,
// constants below the diagonal in the leading columns, and above-diagonal
// variable coefficients strictly smaller than the diagonal in magnitude.
bool is_tdr(const PencilMatrix& m);

// Rows carrying no variable at all.
int constant_row_count(const PencilMatrix& m);

std::string pencil_text(const PencilMatrix& m);
std::string pencil_latex(const PencilMatrix& m);
std::string pencil_json(const PencilMatrix& m);
PencilMatrix pencil_from_json(const std::string& text);
std::string entry_text(const AffineEntry& e, const std::vector<std::string>& vars);

}  // namespace detrep
