#include "detrep/pencil.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "detrep/error.hpp"
#include "detrep/poly_io.hpp"

namespace detrep {

std::string form_name(Form f) {
  switch (f) {
    case Form::Raw: return "RAW";
    case Form::Ndr: return "NDR";
    case Form::Tdr: return "TDR";
    case Form::Rdr: return "RDR";
    case Form::Udr: return "UDR";
  }
  return "RAW";
}

Form form_from_name(const std::string& name) {
  if (name == "RAW") return Form::Raw;
  if (name == "NDR") return Form::Ndr;
  if (name == "TDR") return Form::Tdr;
  if (name == "RDR") return Form::Rdr;
  if (name == "UDR") return Form::Udr;
  throw Error("unknown form tag '" + name + "'");
}

void AffineEntry::add_linear(int var, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = linear.emplace(var, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) linear.erase(it);
  }
}

AffineEntry& AffineEntry::operator+=(const AffineEntry& o) {
  constant += o.constant;
  for (const auto& [v, c] : o.linear) add_linear(v, c);
  return *this;
}

AffineEntry AffineEntry::operator*(const Int& k) const {
  AffineEntry r;
  if (k == 0) return r;
  r.constant = constant * k;
  for (const auto& [v, c] : linear) r.linear.emplace(v, Int(c * k));
  return r;
}

AffineEntry& AffineEntry::operator-=(const AffineEntry& o) {
  constant -= o.constant;
  for (const auto& [v, c] : o.linear) add_linear(v, Int(-c));
  return *this;
}

Int AffineEntry::evaluate(const EvalPoint& point) const {
  Int v = constant;
  for (const auto& [var, c] : linear) v += c * point.at(static_cast<std::size_t>(var));
  return v;
}

Polynomial AffineEntry::to_polynomial(int varcount) const {
  Polynomial p(varcount);
  p.add_term(Monomial{}, constant);
  for (const auto& [var, c] : linear) p.add_term(Monomial::variable(var), c);
  return p;
}

AffineEntry AffineEntry::from_polynomial(const Polynomial& p) {
  AffineEntry e;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one())
      e.constant = c;
    else if (m.degree() == 1)
      e.add_linear(m.lowest_var(), c);
    else
      throw Error("entry is not affine");
  }
  return e;
}

PencilMatrix PencilMatrix::make(int n, Form form, std::vector<std::string> vars) {
  if (n <= 0) throw Error("pencil dimension must be positive");
  PencilMatrix m;
  m.n = n;
  m.form = form;
  m.vars = std::move(vars);
  m.entries.assign(static_cast<std::size_t>(n), std::vector<AffineEntry>(static_cast<std::size_t>(n)));
  m.column_vars.assign(static_cast<std::size_t>(n), std::nullopt);
  return m;
}

bool PencilMatrix::row_is_constant(int r) const {
  for (int c = 0; c < n; ++c)
    if (!at(r, c).is_constant()) return false;
  return true;
}

IntMatrix PencilMatrix::evaluate(const EvalPoint& point) const {
  IntMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = at(r, c).evaluate(point);
  return out;
}

namespace {

Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& grid, std::vector<int> cols,
                        int row, int varcount) {
  if (cols.size() == 1) return grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[0])];
  Polynomial acc(varcount);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& e = grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[k])];
    if (e.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Polynomial sub = cofactor_det(grid, std::move(rest), row + 1, varcount);
    if (k % 2 != 0) sub = -sub;
    acc += e * sub;
  }
  return acc;
}

}  // namespace

Polynomial symbolic_determinant(const PencilMatrix& m) {
  const int n = m.n;
  const int vc = m.varcount();
  std::vector<std::vector<Polynomial>> grid(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    grid[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) grid[static_cast<std::size_t>(r)].push_back(m.at(r, c).to_polynomial(vc));
  }
  if (n <= 4) {
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) cols[static_cast<std::size_t>(c)] = c;
    return cofactor_det(grid, std::move(cols), 0, vc);
  }
  int sign = 1;
  Polynomial prev = Polynomial::constant(vc, 1);
  for (int k = 0; k + 1 < n; ++k) {
    auto& gk = grid[static_cast<std::size_t>(k)];
    if (gk[static_cast<std::size_t>(k)].is_zero()) {
      int r = k + 1;
      while (r < n && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) ++r;
      if (r == n) return Polynomial(vc);
      std::swap(grid[static_cast<std::size_t>(k)], grid[static_cast<std::size_t>(r)]);
      sign = -sign;
    }
    const Polynomial& pivot = grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      auto& gi = grid[static_cast<std::size_t>(i)];
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = pivot * gi[static_cast<std::size_t>(j)] -
                         gi[static_cast<std::size_t>(k)] * grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        gi[static_cast<std::size_t>(j)] = num.divided_exact(prev);
      }
    }
    prev = pivot;
  }
  Polynomial det = grid[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign < 0 ? -det : det;
}

bool eval_determinant_check(const PencilMatrix& m, const Polynomial& p, int trials,
                            std::uint64_t seed) {
  if (trials < 1) throw Error("eval_determinant_check: trials must be >= 1");
  if (p.varcount() != m.varcount())
    throw Error("eval_determinant_check: variable count mismatch");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2000001;  // [-10^6, 10^6]
  for (int t = 0; t < trials; ++t) {
    EvalPoint pt(static_cast<std::size_t>(m.varcount()));
    for (auto& x : pt) x = Int(static_cast<long>(rng() % span) - 1000000);
    if (determinant(m.evaluate(pt)) != p.evaluate(pt)) return false;
  }
  return true;
}

namespace {

// per-column variable set; nullopt = constant column, -2 = mixed
std::vector<std::optional<int>> column_variables(const PencilMatrix& m, bool* mixed) {
  std::vector<std::optional<int>> cv(static_cast<std::size_t>(m.n));
  *mixed = false;
  for (int c = 0; c < m.n; ++c) {
    std::set<int> vars;
    for (int r = 0; r < m.n; ++r)
      for (const auto& [v, k] : m.at(r, c).linear) vars.insert(v);
    if (vars.size() > 1) *mixed = true;
    if (vars.size() == 1) cv[static_cast<std::size_t>(c)] = *vars.begin();
  }
  return cv;
}

}  // namespace

bool is_ndr(const PencilMatrix& m) {
  bool mixed = false;
  auto cv = column_variables(m, &mixed);
  if (mixed) return false;
  // declared column variables, when present, must cover the observed ones
  if (!m.column_vars.empty()) {
    for (int c = 0; c < m.n; ++c) {
      const auto& actual = cv[static_cast<std::size_t>(c)];
      const auto& declared = m.column_vars[static_cast<std::size_t>(c)];
      if (actual && (!declared || *declared != *actual)) return false;
    }
  }
  return true;
}

bool is_tdr(const PencilMatrix& m) {
  bool mixed = false;
  auto cv = column_variables(m, &mixed);
  if (mixed) return false;
  const int n = m.n;
  int k = n;
  while (k > 0 && m.row_is_constant(k - 1)) --k;
  // rows >= k are all-constant by construction of k
  for (int i = 0; i < k; ++i) {
    const auto& col = cv[static_cast<std::size_t>(i)];
    if (!col) return false;
    const auto& diag = m.at(i, i).linear;
    auto it = diag.find(*col);
    if (it == diag.end() || it->second == 0) return false;  // condition 1
    for (int j = i + 1; j < n; ++j)                          // condition 2
      if (!m.at(j, i).is_constant()) return false;
    Int bii = int_abs(it->second);
    for (int j = 0; j < i; ++j) {  // condition 3
      const auto& lin = m.at(j, i).linear;
      auto jt = lin.find(*col);
      if (jt != lin.end() && int_abs(jt->second) >= bii) return false;
    }
  }
  return true;
}

int constant_row_count(const PencilMatrix& m) {
  int k = 0;
  for (int r = 0; r < m.n; ++r)
    if (m.row_is_constant(r)) ++k;
  return k;
}

std::string entry_text(const AffineEntry& e, const std::vector<std::string>& vars) {
  TermStream ts;
  for (const auto& [v, c] : e.linear) {
    Int a = int_abs(c);
    std::string body = a == 1 ? vars.at(static_cast<std::size_t>(v))
                              : int_str(a) + "*" + vars.at(static_cast<std::size_t>(v));
    ts.add(c < 0, body);
  }
  if (e.constant != 0) ts.add(e.constant < 0, int_str(int_abs(e.constant)));
  return ts.str();
}

namespace {

std::string entry_latex(const AffineEntry& e, const std::vector<std::string>& vars) {
  TermStream ts;
  for (const auto& [v, c] : e.linear) {
    Int a = int_abs(c);
    std::string name = monomial_latex(Monomial::variable(v), vars);
    ts.add(c < 0, a == 1 ? name : int_str(a) + name);
  }
  if (e.constant != 0) ts.add(e.constant < 0, int_str(int_abs(e.constant)));
  return ts.str();
}

}  // namespace

std::string pencil_text(const PencilMatrix& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.n));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.n), 0);
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) {
      std::string s = entry_text(m.at(r, c), m.vars);
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

std::string pencil_latex(const PencilMatrix& m) {
  std::string out = "\\begin{bmatrix}\n";
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) {
      out += entry_latex(m.at(r, c), m.vars);
      if (c + 1 < m.n) out += " & ";
    }
    if (r + 1 < m.n) out += " \\\\";
    out += "\n";
  }
  out += "\\end{bmatrix}\n";
  return out;
}

std::string pencil_json(const PencilMatrix& m) {
  nlohmann::json j;
  j["form"] = form_name(m.form);
  j["n"] = m.n;
  j["vars"] = m.vars;
  auto rows = nlohmann::json::array();
  for (int r = 0; r < m.n; ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < m.n; ++c) {
      const auto& e = m.at(r, c);
      nlohmann::json cell;
      cell["c"] = int_str(e.constant);
      auto lin = nlohmann::json::object();
      for (const auto& [v, k] : e.linear) lin[std::to_string(v)] = int_str(k);
      cell["lin"] = std::move(lin);
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

PencilMatrix pencil_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  PencilMatrix m = PencilMatrix::make(n, form_from_name(j.at("form").get<std::string>()), vars);
  const auto& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != n) throw Error("pencil JSON: wrong row count");
  for (int r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != n) throw Error("pencil JSON: wrong column count");
    for (int c = 0; c < n; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      AffineEntry e;
      e.constant = Int(cell.at("c").get<std::string>(), 10);
      for (const auto& [key, val] : cell.at("lin").items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= static_cast<int>(vars.size()))
          throw Error("pencil JSON: variable index out of range");
        e.add_linear(v, Int(val.get<std::string>(), 10));
      }
      m.at(r, c) = std::move(e);
    }
  }
  bool mixed = false;
  m.column_vars = column_variables(m, &mixed);
  return m;
}

}  // namespace detrep
