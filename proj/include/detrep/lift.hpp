#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detrep/pencil.hpp"
#include "detrep/represent.hpp"
#include "detrep/symbolic.hpp"

namespace detrep {

// One lifted coefficient: new_var stands for coeff * x_carrier, or for the
// bare coefficient when carrier is absent (constant terms).
struct LiftBinding {
  int new_var = 0;
  Coef coeff;
  std::optional<int> carrier;
};

struct LiftingRecord {
  int original_varcount = 0;
  std::vector<LiftBinding> bindings;  // new_var indices are contiguous from original_varcount
};

struct LiftResult {
  Polynomial lifted;                     // all coefficients 1
  std::vector<std::string> lifted_vars;  // original names + fresh names
  LiftingRecord record;
};

// One fresh variable per term. The coefficient rides on the lowest-index
// variable of the monomial; a constant term is replaced by its fresh variable
// outright. Every term must carry a single symbolic name or a plain integer.
LiftResult lift_coefficients(const SymbolicPoly& p);

// Improved chain form of the lifted polynomial with the fresh variables
// ranked first in the division order.
ChainForm lifted_chain_form(const LiftResult& lift);

// Affine matrix over the original variables whose entries carry exact
// symbolic scalars (integers when the input had integer coefficients).
struct UdrEntry {
  Coef constant;
  std::map<int, Coef> linear;
  bool is_constant() const { return linear.empty(); }
  void add_linear(int var, const Coef& c);
};

struct UdrMatrix {
  int n = 0;
  std::vector<std::string> vars;
  std::vector<std::vector<UdrEntry>> entries;

  UdrEntry& at(int r, int c) { return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const UdrEntry& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  bool concrete() const;           // no symbolic names anywhere
  PencilMatrix to_pencil() const;  // requires concrete(); tagged UDR
  IntMatrix evaluate(const EvalPoint& point, const std::map<std::string, Int>& binding) const;
};

struct UdrResult {
  UdrMatrix matrix;
  LiftingRecord record;
  PencilMatrix lifted_rdr;  // the RDR over the lifted variables, pre-substitution
};

// lift -> improved chain form -> ndr -> tdr -> rdr -> substitute the lifted
// variables back. The zero polynomial yields the 1x1 matrix [0].
UdrResult udr(const SymbolicPoly& p);

// det(M(pt)) == p(pt) with the symbolic names bound to random integers, over
// `trials` deterministic sample points.
bool udr_eval_check(const UdrMatrix& m, const SymbolicPoly& p, int trials, std::uint64_t seed);

std::string udr_text(const UdrMatrix& m);
std::string udr_latex(const UdrMatrix& m);
std::string udr_json(const UdrMatrix& m);

}  // namespace detrep
