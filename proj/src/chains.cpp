#include "detrep/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "detrep/error.hpp"

namespace detrep {

Chain chain_of_monomial(const Monomial& m, std::optional<int> end_var) {
  if (end_var && m.exponent(*end_var) == 0)
    throw Error("chain_of_monomial: end variable does not occur in the monomial");
  Chain ch;
  Monomial cur = m;
  ch.monomials.push_back(cur);
  while (cur.degree() > 1) {
    int v = -1;
    for (const auto& [w, e] : cur.factors()) {
      if (end_var && w == *end_var) continue;
      v = w;
      break;
    }
    if (v < 0) v = *end_var;  // only end_var left, shed its surplus powers
    cur = *cur.divided_by_var(v);
    ch.monomials.push_back(cur);
  }
  return ch;
}

Polynomial ChainForm::reconstruct() const {
  Polynomial p(varcount);
  for (const auto& e : entries) p.add_term(e.mono, e.coeff);
  return p;
}

void validate_chain_form(const ChainForm& cf) {
  if (cf.entries.empty()) throw Error("chain form is empty");
  for (std::size_t i = 0; i < cf.entries.size(); ++i) {
    const auto& e = cf.entries[i];
    if (e.mono.degree() >= 2) {
      if (!e.succ || !e.succ_var)
        throw Error("chain form entry of degree >= 2 lacks a successor");
      if (*e.succ <= i) throw Error("chain form successor does not point forward");
      if (*e.succ >= cf.entries.size()) throw Error("chain form successor out of range");
      auto q = e.mono.divided_by_var(*e.succ_var);
      if (!q || !(*q == cf.entries[*e.succ].mono))
        throw Error("chain form successor relation is violated");
    }
    if (e.mono.is_one() && cf.constant_pos != std::optional<std::size_t>(i))
      throw Error("constant entry position not recorded");
  }
}

namespace {

struct Elem {
  Monomial m;
  std::optional<int> div;  // variable dividing to the next monomial of the chain
};

ChainForm layout_plain(const Polynomial& p, const std::vector<std::vector<Elem>>& chains) {
  ChainForm cf;
  cf.varcount = p.varcount();
  std::set<Monomial, MonomialOrder> assigned;
  for (const auto& ch : chains) {
    std::size_t base = cf.entries.size();
    for (std::size_t k = 0; k < ch.size(); ++k) {
      ChainFormEntry e;
      e.mono = ch[k].m;
      if (p.has_term(e.mono) && assigned.insert(e.mono).second)
        e.coeff = p.coefficient(e.mono);
      if (ch[k].div) {
        e.succ = base + k + 1;
        e.succ_var = ch[k].div;
      }
      if (e.mono.is_one()) cf.constant_pos = cf.entries.size();
      cf.entries.push_back(std::move(e));
    }
  }
  validate_chain_form(cf);
  if (!(cf.reconstruct() == p)) throw Error("chain form does not reconstruct the polynomial");
  return cf;
}

ChainForm layout_improved(const Polynomial& p, const std::vector<std::vector<Elem>>& chains) {
  ChainForm cf;
  cf.varcount = p.varcount();
  std::map<Monomial, std::size_t, MonomialOrder> position;
  for (const auto& ch : chains)
    for (const auto& el : ch) {
      ChainFormEntry e;
      e.mono = el.m;
      e.coeff = p.coefficient(el.m);
      if (el.m.is_one()) cf.constant_pos = cf.entries.size();
      if (!position.emplace(el.m, cf.entries.size()).second)
        throw Error("improved chain form repeats a monomial");
      cf.entries.push_back(std::move(e));
    }
  std::size_t idx = 0;
  for (const auto& ch : chains)
    for (const auto& el : ch) {
      if (el.div) {
        Monomial tgt = *el.m.divided_by_var(*el.div);
        cf.entries[idx].succ = position.at(tgt);
        cf.entries[idx].succ_var = el.div;
      }
      ++idx;
    }
  validate_chain_form(cf);
  if (!(cf.reconstruct() == p)) throw Error("chain form does not reconstruct the polynomial");
  return cf;
}

}  // namespace

ChainForm chain_form(const Polynomial& p) {
  if (p.is_zero()) throw Error("chain_form: zero polynomial");
  std::vector<std::vector<Elem>> chains;
  std::set<Monomial, MonomialOrder> covered;
  // terms iterate in canonical order: descending degree groups, graded-lex
  for (const auto& [head, c] : p.terms()) {
    if (covered.count(head)) continue;
    std::vector<Elem> ch;
    Monomial cur = head;
    while (cur.degree() > 1) {
      int v = cur.lowest_var();
      ch.push_back({cur, v});
      cur = *cur.divided_by_var(v);
    }
    ch.push_back({cur, std::nullopt});
    for (const auto& el : ch) covered.insert(el.m);
    chains.push_back(std::move(ch));
  }
  return layout_plain(p, chains);
}

ChainForm improved_chain_form(const Polynomial& p) {
  std::vector<int> rank(static_cast<std::size_t>(p.varcount()));
  for (std::size_t v = 0; v < rank.size(); ++v) rank[v] = static_cast<int>(v);
  return improved_chain_form(p, rank);
}

ChainForm improved_chain_form(const Polynomial& p, const std::vector<int>& div_rank) {
  if (p.is_zero()) throw Error("improved_chain_form: zero polynomial");
  if (static_cast<int>(div_rank.size()) != p.varcount())
    throw Error("improved_chain_form: division order does not match variable count");
  std::vector<std::vector<Elem>> chains;
  std::map<Monomial, std::size_t, MonomialOrder> owner;  // monomial -> chain index

  auto ordered_vars = [&](const Monomial& m) {
    std::vector<int> vs;
    for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), [&](int a, int b) {
      return div_rank[static_cast<std::size_t>(a)] < div_rank[static_cast<std::size_t>(b)];
    });
    return vs;
  };

  for (const auto& [head, hc] : p.terms()) {
    if (owner.count(head)) continue;
    std::vector<Elem> cj;
    Monomial cur = head;
    std::optional<std::pair<std::size_t, Monomial>> merge;
    while (true) {
      if (cur.degree() <= 1) {
        cj.push_back({cur, std::nullopt});
        break;
      }
      std::vector<int> vs = ordered_vars(cur);
      std::optional<int> pick;
      bool merging = false;
      for (int v : vs) {  // prefer a division landing in an existing chain
        if (owner.count(*cur.divided_by_var(v))) {
          pick = v;
          merging = true;
          break;
        }
      }
      if (!pick) pick = vs.front();
      Monomial nxt = *cur.divided_by_var(*pick);
      cj.push_back({cur, pick});
      if (merging) {
        merge = {{owner.at(nxt), nxt}};
        break;
      }
      cur = nxt;
    }
    if (merge) {
      // splice the new chain right before the shared monomial (Definition 3)
      auto& [ci, tgt] = *merge;
      auto& C = chains[ci];
      auto it = std::find_if(C.begin(), C.end(), [&](const Elem& e) { return e.m == tgt; });
      C.insert(it, cj.begin(), cj.end());
      for (const auto& el : cj) owner.emplace(el.m, ci);
    } else {
      for (const auto& el : cj) owner.emplace(el.m, chains.size());
      chains.push_back(std::move(cj));
    }
  }
  return layout_improved(p, chains);
}

ChainForm make_chain_form(int varcount, const std::vector<std::pair<Int, Monomial>>& pairs,
                          bool require_unique) {
  ChainForm cf;
  cf.varcount = varcount;
  std::set<Monomial, MonomialOrder> seen;
  for (const auto& [c, m] : pairs) {
    if (require_unique && !seen.insert(m).second)
      throw Error("make_chain_form: duplicate monomial");
    ChainFormEntry e;
    e.coeff = c;
    e.mono = m;
    if (m.is_one()) cf.constant_pos = cf.entries.size();
    cf.entries.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < cf.entries.size(); ++i) {
    auto& e = cf.entries[i];
    if (e.mono.degree() < 2) continue;
    for (const auto& [v, ex] : e.mono.factors()) {
      Monomial q = *e.mono.divided_by_var(v);
      for (std::size_t j = i + 1; j < cf.entries.size(); ++j) {
        if (cf.entries[j].mono == q) {
          e.succ = j;
          e.succ_var = v;
          break;
        }
      }
      if (e.succ) break;
    }
    if (!e.succ) throw Error("make_chain_form: no successor for a degree >= 2 entry");
  }
  validate_chain_form(cf);
  return cf;
}

std::string chain_form_json(const ChainForm& cf, const std::string& mode) {
  nlohmann::json j;
  j["mode"] = mode;
  auto arr = nlohmann::json::array();
  for (const auto& e : cf.entries) {
    nlohmann::json item;
    item["coeff"] = int_str(e.coeff);
    item["exps"] = e.mono.dense_exponents(cf.varcount);
    item["succ"] = e.succ ? nlohmann::json(*e.succ) : nlohmann::json(nullptr);
    item["var"] = e.succ_var ? nlohmann::json(*e.succ_var) : nlohmann::json(nullptr);
    arr.push_back(std::move(item));
  }
  j["entries"] = std::move(arr);
  return j.dump();
}

}  // namespace detrep
