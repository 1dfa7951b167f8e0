#include "qmrc/cli.hpp"

#include "qmrc/brackets.hpp"
#include "qmrc/coeffsolver.hpp"
#include "qmrc/expr.hpp"
#include "qmrc/identities.hpp"
#include "qmrc/spaces.hpp"
#include "qmrc/wz.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace qmrc::cli {

namespace {

QuasiForm eval_text(const std::string& text) { return expr::eval(*expr::parse(text)); }

int cmd_expand(const std::string& text, long order, const std::string& out_file,
               std::ostream& out, std::ostream& err) {
  const QuasiForm f = eval_text(text);
  const std::string body = to_text(to_qseries(f, order));
  if (out_file.empty()) {
    out << body;
    return 0;
  }
  std::ofstream os(out_file);
  if (!os) {
    err << "cannot open output file: " << out_file << "\n";
    return 2;
  }
  os << body;
  return 0;
}

int cmd_bracket(const std::string& ftext, const std::string& gtext, int n, int k, int s, int l,
                int t, std::ostream& out) {
  const QuasiForm f = eval_text(ftext);
  const QuasiForm g = eval_text(gtext);
  if (k < 0) k = f.weight();
  if (s < 0) s = std::max(depth_of(f.poly()), 0);
  if (l < 0) l = g.weight();
  if (t < 0) t = std::max(depth_of(g.poly()), 0);
  const QuasiForm h = bracket(f, g, BracketParams(n, k, s, l, t));
  out << to_text(h.poly());
  return 0;
}

int cmd_verify(const std::string& which, long nmax_opt, std::ostream& out) {
  const long nmax_tau = nmax_opt > 0 ? nmax_opt : 50;
  const int nmax_structure = nmax_opt > 0 ? static_cast<int>(nmax_opt) : 8;
  std::vector<IdentityReport> reports;
  const bool all = which == "all";
  if (all || which == "ramanujan") reports.push_back(verify_ramanujan(nmax_tau));
  if (all || which == "niebur") reports.push_back(verify_niebur(nmax_tau));
  if (all || which == "vdp") reports.push_back(verify_vanderpol(nmax_tau));
  if (all || which == "chazy") reports.push_back(verify_chazy());
  if (all || which == "prop-dern") reports.push_back(verify_structure(nmax_structure));
  if (reports.empty()) throw std::domain_error("verify: unknown selector \"" + which + "\"");
  std::sort(reports.begin(), reports.end(),
            [](const IdentityReport& a, const IdentityReport& b) { return a.name < b.name; });
  bool ok = true;
  for (const auto& r : reports) {
    out << to_text(r);
    ok = ok && r.pass();
  }
  return ok ? 0 : 1;
}

int cmd_decompose(const std::string& text, std::ostream& out) {
  const QuasiForm f = eval_text(text);
  const Decomposition d = decompose(f);
  out << "decomposition\n";
  out << "weight " << d.weight << "\n";
  if (d.line) out << "line " << d.line->str() << "\n";
  for (const auto& [j, m] : d.parts) out << "part " << j << " " << to_expression(m) << "\n";
  return 0;
}

int cmd_solve_coeffs(int k, int s, int l, int t, int n, std::ostream& out) {
  const CoeffVector v = solve_and_confirm(k, l, s, t, n);
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i].str();
  }
  out << ")\n";
  return 0;
}

int cmd_wz(long max_n, std::ostream& out) {
  if (max_n < 2) throw std::domain_error("wz: --max-N must be at least 2");
  bool ok = true;
  for (long N = 2; N <= max_n; ++N) {
    const CertificateReport rep = certificate_check(N);
    out << "wz N=" << N << " checked=" << rep.checked_r.size()
        << " skipped=" << rep.skipped_r.size()
        << " identity=" << (rep.identities_ok ? "pass" : "fail")
        << " ratio=" << (rep.ratio_ok ? "pass" : "fail")
        << " closed-form=" << (rep.closed_form_ok ? "pass" : "fail") << "\n";
    ok = ok && rep.pass();
  }
  for (int m = 0; m <= 3; ++m) {
    const bool q2 = q2_bracket_check(m);
    out << "wz q2 m=" << m << " " << (q2 ? "pass" : "fail") << "\n";
    ok = ok && q2;
  }
  out << "wz result " << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : 1;
}

int cmd_tau(long max_n, std::ostream& out) {
  if (max_n < 1) throw std::domain_error("tau: --max-n must be at least 1");
  const QSeries d = delta(max_n);
  for (long n = 1; n <= max_n; ++n) out << "tau " << n << " " << d.coeff(n).str() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for quasimodular forms in E2, E4, E6"};
  app.require_subcommand(1);

  std::string expand_expr, expand_out;
  long expand_order = 20;
  CLI::App* expand = app.add_subcommand("expand", "q-expansion of an expression");
  expand->add_option("expr", expand_expr, "expression to expand")->required();
  expand->add_option("--order", expand_order, "truncation order (default 20)");
  expand->add_option("--out", expand_out, "write the series to a file");

  std::string br_f, br_g;
  int br_n = 0, br_k = -1, br_s = -1, br_l = -1, br_t = -1;
  CLI::App* br = app.add_subcommand("bracket", "bracket of two expressions");
  br->add_option("--f", br_f, "first operand")->required();
  br->add_option("--g", br_g, "second operand")->required();
  br->add_option("--n", br_n, "bracket order")->required();
  br->add_option("--k", br_k, "weight override for f");
  br->add_option("--s", br_s, "depth bound override for f");
  br->add_option("--l", br_l, "weight override for g");
  br->add_option("--t", br_t, "depth bound override for g");

  std::string verify_which;
  long verify_nmax = 0;
  CLI::App* verify = app.add_subcommand("verify", "run identity verifiers");
  verify->add_option("which", verify_which, "ramanujan|niebur|vdp|chazy|prop-dern|all")
      ->required();
  verify->add_option("--nmax", verify_nmax, "coefficient / membership range");

  std::string dec_expr;
  CLI::App* dec = app.add_subcommand("decompose", "split into derivatives of modular forms");
  dec->add_option("expr", dec_expr, "expression to decompose")->required();

  int sc_k = 0, sc_s = 0, sc_l = 0, sc_t = 0, sc_n = 0;
  CLI::App* sc = app.add_subcommand("solve-coeffs", "derive bracket coefficients from the kernel");
  sc->add_option("--k", sc_k, "weight of the first slot")->required();
  sc->add_option("--s", sc_s, "depth bound of the first slot")->required();
  sc->add_option("--l", sc_l, "weight of the second slot")->required();
  sc->add_option("--t", sc_t, "depth bound of the second slot")->required();
  sc->add_option("--n", sc_n, "bracket order")->required();

  long wz_max = 40;
  CLI::App* wz = app.add_subcommand("wz", "telescoping certificate suite");
  wz->add_option("--max-N", wz_max, "largest N to certify (default 40)");

  long tau_max = 50;
  CLI::App* tau_cmd = app.add_subcommand("tau", "tau coefficients");
  tau_cmd->add_option("--max-n", tau_max, "largest index (default 50)");

  std::vector<const char*> argv;
  argv.push_back("qmrc");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (expand->parsed()) return cmd_expand(expand_expr, expand_order, expand_out, out, err);
    if (br->parsed()) return cmd_bracket(br_f, br_g, br_n, br_k, br_s, br_l, br_t, out);
    if (verify->parsed()) return cmd_verify(verify_which, verify_nmax, out);
    if (dec->parsed()) return cmd_decompose(dec_expr, out);
    if (sc->parsed()) return cmd_solve_coeffs(sc_k, sc_s, sc_l, sc_t, sc_n, out);
    if (wz->parsed()) return cmd_wz(wz_max, out);
    if (tau_cmd->parsed()) return cmd_tau(tau_max, out);
    err << "no subcommand given\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // A falsified internal invariant is a failed check, not a usage problem.
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace qmrc::cli
