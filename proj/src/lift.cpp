#include "detrep/lift.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "detrep/error.hpp"
#include "detrep/poly_io.hpp"

namespace detrep {

namespace {

std::string fresh_name(const std::set<std::string>& taken, int i) {
  std::string base = "t" + std::to_string(i + 1);
  while (taken.count(base)) base += "_";
  return base;
}

void check_liftable(const Coef& c) {
  if (c.is_integer()) return;
  if (c.symbols().size() == 1 && c.integer_part() == 0 &&
      int_abs(c.symbols().begin()->second) == 1)
    return;
  throw Error("term coefficient must be a single symbolic name or an integer");
}

}  // namespace

LiftResult lift_coefficients(const SymbolicPoly& p) {
  LiftResult out;
  const int k = p.varcount();
  out.record.original_varcount = k;
  out.lifted_vars = p.vars;
  std::set<std::string> taken(p.vars.begin(), p.vars.end());

  const int nterms = static_cast<int>(p.terms.size());
  out.lifted = Polynomial(k + nterms);
  for (int i = 0; i < nterms; ++i) {
    const auto& t = p.terms[static_cast<std::size_t>(i)];
    check_liftable(t.coeff);
    std::string name = fresh_name(taken, i);
    taken.insert(name);
    out.lifted_vars.push_back(name);
    int nv = k + i;

    LiftBinding b;
    b.new_var = nv;
    b.coeff = t.coeff;
    if (t.mono.is_one()) {
      out.lifted.add_term(Monomial::variable(nv), 1);
    } else {
      int carrier = t.mono.lowest_var();
      b.carrier = carrier;
      Monomial reduced = *t.mono.divided_by_var(carrier);
      out.lifted.add_term(reduced.times_var(nv), 1);
    }
    out.record.bindings.push_back(std::move(b));
  }
  return out;
}

ChainForm lifted_chain_form(const LiftResult& lift) {
  const int total = lift.lifted.varcount();
  const int k = lift.record.original_varcount;
  std::vector<int> rank(static_cast<std::size_t>(total));
  for (int v = 0; v < k; ++v) rank[static_cast<std::size_t>(v)] = (total - k) + v;
  for (int v = k; v < total; ++v) rank[static_cast<std::size_t>(v)] = v - k;
  return improved_chain_form(lift.lifted, rank);
}

void UdrEntry::add_linear(int var, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = linear.emplace(var, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) linear.erase(it);
  }
}

bool UdrMatrix::concrete() const {
  for (const auto& row : entries)
    for (const auto& e : row) {
      if (!e.constant.is_integer()) return false;
      for (const auto& [v, c] : e.linear)
        if (!c.is_integer()) return false;
    }
  return true;
}

PencilMatrix UdrMatrix::to_pencil() const {
  if (!concrete()) throw Error("matrix carries symbolic coefficients");
  PencilMatrix m = PencilMatrix::make(n, Form::Udr, vars);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m.at(r, c).constant = at(r, c).constant.integer_part();
      for (const auto& [v, k] : at(r, c).linear) m.at(r, c).add_linear(v, k.integer_part());
    }
  return m;
}

IntMatrix UdrMatrix::evaluate(const EvalPoint& point,
                              const std::map<std::string, Int>& binding) const {
  IntMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Int v = at(r, c).constant.evaluate(binding);
      for (const auto& [var, k] : at(r, c).linear)
        v += k.evaluate(binding) * point.at(static_cast<std::size_t>(var));
      out.at(r, c) = v;
    }
  return out;
}

UdrResult udr(const SymbolicPoly& input) {
  SymbolicPoly p;
  p.vars = input.vars;
  for (const auto& t : input.terms)
    if (!t.coeff.is_zero()) p.terms.push_back(t);

  UdrResult out;
  const int k = p.varcount();
  if (p.terms.empty()) {
    out.matrix.n = 1;
    out.matrix.vars = p.vars;
    out.matrix.entries.assign(1, std::vector<UdrEntry>(1));
    out.lifted_rdr = PencilMatrix::make(1, Form::Rdr, p.vars);
    out.record.original_varcount = k;
    return out;
  }

  LiftResult lift = lift_coefficients(p);
  // shed the fresh variables first so the chains funnel into the original
  // variables and merge there
  ChainForm cf = lifted_chain_form(lift);
  PencilMatrix N = ndr(cf, lift.lifted_vars);
  PencilMatrix R = rdr(tdr(N));

  out.record = lift.record;
  out.lifted_rdr = R;
  out.matrix.n = R.n;
  out.matrix.vars = p.vars;
  out.matrix.entries.assign(static_cast<std::size_t>(R.n),
                            std::vector<UdrEntry>(static_cast<std::size_t>(R.n)));
  for (int r = 0; r < R.n; ++r)
    for (int c = 0; c < R.n; ++c) {
      const auto& src = R.at(r, c);
      UdrEntry& dst = out.matrix.at(r, c);
      dst.constant = Coef(src.constant);
      for (const auto& [v, coeff] : src.linear) {
        if (v < k) {
          dst.add_linear(v, Coef(coeff));
          continue;
        }
        const LiftBinding& b = out.record.bindings.at(static_cast<std::size_t>(v - k));
        Coef scaled = b.coeff * coeff;
        if (b.carrier)
          dst.add_linear(*b.carrier, scaled);
        else
          dst.constant += scaled;
      }
    }
  return out;
}

bool udr_eval_check(const UdrMatrix& m, const SymbolicPoly& p, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error("udr_eval_check: trials must be >= 1");
  if (static_cast<int>(m.vars.size()) != p.varcount())
    throw Error("udr_eval_check: variable count mismatch");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2000001;
  auto draw = [&]() { return Int(static_cast<long>(rng() % span) - 1000000); };
  std::set<std::string> names = p.symbol_names();
  for (int t = 0; t < trials; ++t) {
    EvalPoint pt(static_cast<std::size_t>(p.varcount()));
    for (auto& x : pt) x = draw();
    std::map<std::string, Int> binding;
    for (const auto& n : names) binding.emplace(n, draw());
    if (determinant(m.evaluate(pt, binding)) != p.evaluate(pt, binding)) return false;
  }
  return true;
}

namespace {

std::string udr_entry_text(const UdrEntry& e, const std::vector<std::string>& vars, bool latex) {
  TermStream ts;
  for (const auto& [v, c] : e.linear) {
    std::string name = latex ? monomial_latex(Monomial::variable(v), vars)
                             : vars.at(static_cast<std::size_t>(v));
    std::string cs = c.str();
    bool neg = false;
    if (c.is_atom() && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body;
    if (cs == "1")
      body = name;
    else if (c.is_atom())
      body = latex ? cs + name : cs + "*" + name;
    else
      body = "(" + cs + ")" + (latex ? "" : "*") + name;
    ts.add(neg, body);
  }
  if (!e.constant.is_zero()) {
    std::string cs = e.constant.str();
    bool neg = false;
    if (e.constant.is_atom() && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    ts.add(neg, e.constant.is_atom() ? cs : "(" + cs + ")");
  }
  return ts.str();
}

}  // namespace

std::string udr_text(const UdrMatrix& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.n));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.n), 0);
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) {
      std::string s = udr_entry_text(m.at(r, c), m.vars, false);
      width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], s.size());
      cells[static_cast<std::size_t>(r)].push_back(std::move(s));
    }
  std::string out;
  for (int r = 0; r < m.n; ++r) {
    out += "[ ";
    for (int c = 0; c < m.n; ++c) {
      const std::string& s = cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      out += std::string(width[static_cast<std::size_t>(c)] - s.size(), ' ') + s;
      out += c + 1 < m.n ? "  " : " ";
    }
    out += "]\n";
  }
  return out;
}

std::string udr_latex(const UdrMatrix& m) {
  std::string out = "\\begin{bmatrix}\n";
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) {
      out += udr_entry_text(m.at(r, c), m.vars, true);
      if (c + 1 < m.n) out += " & ";
    }
    if (r + 1 < m.n) out += " \\\\";
    out += "\n";
  }
  out += "\\end{bmatrix}\n";
  return out;
}

std::string udr_json(const UdrMatrix& m) {
  nlohmann::json j;
  j["form"] = "UDR";
  j["n"] = m.n;
  j["vars"] = m.vars;
  auto rows = nlohmann::json::array();
  for (int r = 0; r < m.n; ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < m.n; ++c) {
      const auto& e = m.at(r, c);
      nlohmann::json cell;
      cell["c"] = e.constant.str();
      auto lin = nlohmann::json::object();
      for (const auto& [v, k] : e.linear) lin[std::to_string(v)] = k.str();
      cell["lin"] = std::move(lin);
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

}  // namespace detrep
