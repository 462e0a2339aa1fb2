#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace detrep {

// Product of variable powers; the empty product is the constant monomial 1.
// Exponents are stored sparsely, sorted by variable index.
class Monomial {
 public:
  using Exp = std::uint32_t;

  Monomial() = default;

  static Monomial variable(int v, Exp e = 1);
  static Monomial from_exponents(const std::vector<Exp>& dense);

  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  Exp exponent(int v) const;
  int lowest_var() const;   // -1 when constant
  int highest_var() const;  // -1 when constant

  Monomial times_var(int v) const;
  std::optional<Monomial> divided_by_var(int v) const;
  std::optional<Monomial> divided_by(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;

  const std::vector<std::pair<int, Exp>>& factors() const { return factors_; }
  std::vector<Exp> dense_exponents(int varcount) const;

  bool operator==(const Monomial& o) const = default;

  // Graded lexicographic comparison: higher total degree ranks first, ties are
  // broken by giving more weight to lower variable indices. Returns +1 when a
  // ranks before b in canonical order, -1 when after, 0 when equal.
  static int cmp(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<int, Exp>> factors_;
};

// Comparator putting monomials in canonical (graded-lex descending) order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b) > 0;
  }
};

}  // namespace detrep
