#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "detrep/polynomial.hpp"

namespace detrep {

// Ordered monomial list descending by single-variable division; a constant
// contributes the one-element chain (1).
struct Chain {
  std::vector<Monomial> monomials;
};

// Chain from m down to a single variable (end_var when given). Each step
// divides by the lowest-index variable, keeping end_var for last.
Chain chain_of_monomial(const Monomial& m, std::optional<int> end_var = std::nullopt);

struct ChainFormEntry {
  Int coeff;
  Monomial mono;
  // for entries of degree >= 2: a later position and variable with
  // mono == x_var * entries[succ].mono
  std::optional<std::size_t> succ;
  std::optional<int> succ_var;
};

struct ChainForm {
  int varcount = 0;
  std::vector<ChainFormEntry> entries;
  std::optional<std::size_t> constant_pos;

  std::size_t size() const { return entries.size(); }
  Polynomial reconstruct() const;
};

// Definition-2 style chain form: chains are built per term in descending
// degree order (lowest-index variable division); already-covered monomials do
// not start new chains, but chain interiors may repeat monomials.
ChainForm chain_form(const Polynomial& p);

// Definition-3 style improved chain form: no duplicated monomials. At each
// step the descent first looks for a division landing on a monomial of an
// existing chain (the chains are then spliced into one) and otherwise divides
// by the first variable in division order. The default division order is
// ascending variable index; a caller may rank variables differently
// (div_rank[v] = priority, smaller first), which the coefficient-lifting
// pipeline uses to shed its fresh variables before the original ones.
ChainForm improved_chain_form(const Polynomial& p);
ChainForm improved_chain_form(const Polynomial& p, const std::vector<int>& div_rank);

// Assemble a chain form from explicit (coefficient, monomial) pairs,
// deriving successor links; validates structure. Used for fixed test inputs.
ChainForm make_chain_form(int varcount, const std::vector<std::pair<Int, Monomial>>& pairs,
                          bool require_unique = true);

// Structural validation: successor links present for every degree->=2 entry,
// pointing at a strictly later position with the dividing-variable relation.
void validate_chain_form(const ChainForm& cf);

// {"mode": ..., "entries": [{"coeff", "exps", "succ", "var"}]}
std::string chain_form_json(const ChainForm& cf, const std::string& mode);

}  // namespace detrep
