#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "detrep/chains.hpp"
#include "detrep/error.hpp"
#include "detrep/lift.hpp"
#include "detrep/parse.hpp"
#include "detrep/pencil.hpp"
#include "detrep/poly_io.hpp"
#include "detrep/represent.hpp"

namespace {

using namespace detrep;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error("cannot open input file '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

struct VerifyOutcome {
  bool checked = false;
  bool ok = true;
  std::string how = "skipped";
};

void print_report(const std::string& poly_text, const std::string& form, int dim,
                  const VerifyOutcome& v) {
  std::cerr << "polynomial: " << poly_text << "\n";
  std::cerr << "form: " << form << "\n";
  std::cerr << "dimension: " << dim << "\n";
  std::cerr << "verified: " << (!v.checked ? "skipped" : (v.ok ? "yes (" + v.how + ")" : "NO (" + v.how + ")"))
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string input = "-";
  std::string form_s;
  std::string chain_s = "improved";
  std::string output_s = "text";
  std::string verify_s = "auto";
  int trials = 20;
  std::uint64_t seed = 0;
  bool dump_chain = false;

  CLI::App app{"compile a multivariate polynomial into a matrix of affine entries\n"
               "whose determinant equals the polynomial (NDR/TDR/RDR/UDR)"};
  app.add_option("--input", input, "input file path, or - for stdin (default)");
  app.add_option("--form", form_s, "target form")
      ->required()
      ->check(CLI::IsMember({"ndr", "tdr", "rdr", "udr"}));
  auto* chain_opt = app.add_option("--chain", chain_s, "chain form flavour (default improved)")
                        ->check(CLI::IsMember({"plain", "improved"}));
  app.add_option("--output", output_s, "output format (default text)")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--verify", verify_s, "verification mode (default auto)")
      ->check(CLI::IsMember({"auto", "symbolic", "eval", "none"}));
  app.add_option("--trials", trials, "evaluation trials (default 20)")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "evaluation seed (default env DETREP_SEED or 0)");
  app.add_flag("--dump-chain", dump_chain, "emit the chain form as JSON on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  if (!*seed_opt) {
    if (const char* env = std::getenv("DETREP_SEED")) seed = std::strtoull(env, nullptr, 10);
  }

  SymbolicPoly sp;
  try {
    sp = parse_symbolic_polynomial(read_input(input));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const bool improved = chain_s == "improved";
  try {
    if (form_s == "udr") {
      if (*chain_opt && !improved) {
        std::cerr << "error: the lifting pipeline is defined over the improved chain form; "
                     "--chain plain is not available with --form udr\n";
        return 3;
      }
      UdrResult ur = udr(sp);
      if (dump_chain) {
        SymbolicPoly nonzero;
        nonzero.vars = sp.vars;
        for (const auto& t : sp.terms)
          if (!t.coeff.is_zero()) nonzero.terms.push_back(t);
        if (nonzero.terms.empty()) {
          std::cerr << "{\"mode\":\"improved\",\"entries\":[]}\n";
        } else {
          std::cerr << chain_form_json(lifted_chain_form(lift_coefficients(nonzero)), "improved")
                    << "\n";
        }
      }
      VerifyOutcome verdict;
      if (verify_s == "symbolic" && sp.has_symbols()) {
        std::cerr << "error: symbolic verification is not available for symbolic coefficients; "
                     "use --verify eval\n";
        return 3;
      }
      std::string mode = verify_s;
      if (mode == "auto") mode = (!sp.has_symbols() && ur.matrix.n <= 9) ? "symbolic" : "eval";
      if (mode == "symbolic") {
        verdict.checked = true;
        verdict.how = "symbolic";
        verdict.ok = symbolic_determinant(ur.matrix.to_pencil()) == sp.to_polynomial();
      } else if (mode == "eval") {
        verdict.checked = true;
        verdict.how = "eval, " + std::to_string(trials) + " trials, seed " + std::to_string(seed);
        verdict.ok = udr_eval_check(ur.matrix, sp, trials, seed);
      }
      if (output_s == "text")
        std::cout << udr_text(ur.matrix);
      else if (output_s == "json")
        std::cout << udr_json(ur.matrix) << "\n";
      else
        std::cout << udr_latex(ur.matrix);
      print_report(symbolic_polynomial_text(sp), "UDR", ur.matrix.n, verdict);
      if (!verdict.ok) {
        std::cerr << "error: verification failed\n";
        return 2;
      }
      return 0;
    }

    if (sp.has_symbols()) {
      std::cerr << "error: symbolic coefficients require --form udr\n";
      return 3;
    }
    Polynomial p = sp.to_polynomial();
    const std::vector<std::string>& vars = sp.vars;
    Form target = form_from_name(form_s == "ndr" ? "NDR" : form_s == "tdr" ? "TDR" : "RDR");

    if (dump_chain) {
      if (p.is_zero())
        std::cerr << "{\"mode\":\"" << chain_s << "\",\"entries\":[]}\n";
      else
        std::cerr << chain_form_json(improved ? improved_chain_form(p) : chain_form(p), chain_s)
                  << "\n";
    }

    PencilMatrix M = represent(p, vars, target, improved);

    VerifyOutcome verdict;
    std::string mode = verify_s;
    if (mode == "auto") mode = M.n <= 9 ? "symbolic" : "eval";
    if (mode == "symbolic") {
      verdict.checked = true;
      verdict.how = "symbolic";
      verdict.ok = symbolic_determinant(M) == p;
    } else if (mode == "eval") {
      verdict.checked = true;
      verdict.how = "eval, " + std::to_string(trials) + " trials, seed " + std::to_string(seed);
      verdict.ok = eval_determinant_check(M, p, trials, seed);
    }

    if (output_s == "text")
      std::cout << pencil_text(M);
    else if (output_s == "json")
      std::cout << pencil_json(M) << "\n";
    else
      std::cout << pencil_latex(M);
    print_report(polynomial_text(p, vars), form_name(target), M.n, verdict);
    if (!verdict.ok) {
      std::cerr << "error: verification failed\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
