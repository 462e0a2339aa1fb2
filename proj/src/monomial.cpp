#include "detrep/monomial.hpp"

#include <algorithm>

#include "detrep/error.hpp"

namespace detrep {

Monomial Monomial::variable(int v, Exp e) {
  Monomial m;
  if (v < 0) throw Error("variable index must be non-negative");
  if (e > 0) m.factors_.emplace_back(v, e);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<Exp>& dense) {
  Monomial m;
  for (std::size_t v = 0; v < dense.size(); ++v)
    if (dense[v] > 0) m.factors_.emplace_back(static_cast<int>(v), dense[v]);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial::Exp Monomial::exponent(int v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

int Monomial::lowest_var() const { return factors_.empty() ? -1 : factors_.front().first; }

int Monomial::highest_var() const { return factors_.empty() ? -1 : factors_.back().first; }

Monomial Monomial::times_var(int v) const {
  Monomial r = *this;
  auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), v,
                             [](const auto& f, int w) { return f.first < w; });
  if (it != r.factors_.end() && it->first == v)
    ++it->second;
  else
    r.factors_.insert(it, {v, 1});
  return r;
}

std::optional<Monomial> Monomial::divided_by_var(int v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, int w) { return f.first < w; });
  if (it == factors_.end() || it->first != v) return std::nullopt;
  Monomial r = *this;
  auto jt = r.factors_.begin() + (it - factors_.begin());
  if (jt->second == 1)
    r.factors_.erase(jt);
  else
    --jt->second;
  return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  auto ia = factors_.begin();
  for (const auto& [v, e] : o.factors_) {
    while (ia != factors_.end() && ia->first < v) r.factors_.push_back(*ia++);
    if (ia == factors_.end() || ia->first != v || ia->second < e) return std::nullopt;
    if (ia->second > e) r.factors_.emplace_back(v, ia->second - e);
    ++ia;
  }
  while (ia != factors_.end()) r.factors_.push_back(*ia++);
  return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto ia = factors_.begin();
  auto ib = o.factors_.begin();
  while (ia != factors_.end() || ib != o.factors_.end()) {
    if (ib == o.factors_.end() || (ia != factors_.end() && ia->first < ib->first))
      r.factors_.push_back(*ia++);
    else if (ia == factors_.end() || ib->first < ia->first)
      r.factors_.push_back(*ib++);
    else {
      r.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

std::vector<Monomial::Exp> Monomial::dense_exponents(int varcount) const {
  std::vector<Exp> d(static_cast<std::size_t>(varcount), 0);
  for (const auto& [v, e] : factors_) d.at(static_cast<std::size_t>(v)) = e;
  return d;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors_.end()) return 1;
  if (ib != b.factors_.end()) return -1;
  return 0;
}

}  // namespace detrep
