#include "qmrc/cli.hpp"

#include "qmrc/expr.hpp"
#include "qmrc/qseries.hpp"
#include "qmrc/spaces.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace qmrc;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

// Reads the decompose output format back into a polynomial.
GradedPoly rebuild_decomposition(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  REQUIRE(std::getline(is, line));
  REQUIRE(line == "decomposition");
  REQUIRE(std::getline(is, line));
  REQUIRE(line.rfind("weight ", 0) == 0);
  const int weight = std::stoi(line.substr(7));
  GradedPoly acc;
  while (std::getline(is, line)) {
    if (line.rfind("line ", 0) == 0) {
      const Rational c = Rational::from_string(line.substr(5));
      acc += c * derive_poly(e2_poly(), weight / 2 - 1);
    } else if (line.rfind("part ", 0) == 0) {
      std::istringstream pl(line.substr(5));
      int j;
      pl >> j;
      std::string expr_text;
      std::getline(pl, expr_text);
      acc += derive_poly(expr::eval(*expr::parse(expr_text)).poly(), j);
    } else {
      FAIL("unexpected decompose line: " << line);
    }
  }
  return acc;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("expand writes the series text") {
    const CliResult r = run_cli({"expand", "Delta", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "qseries\norder 5\ncoeff 0 0\ncoeff 1 1\ncoeff 2 -24\ncoeff 3 252\n"
          "coeff 4 -1472\ncoeff 5 4830\n");
    CHECK(qseries_from_text(r.out) == delta(5));
    const CliResult dflt = run_cli({"expand", "E4"});
    CHECK(dflt.code == 0);
    CHECK(qseries_from_text(dflt.out) == eisenstein(4, 20));
  }

  TEST_CASE("expand honours --out") {
    const auto path = std::filesystem::temp_directory_path() / "qmrc_cli_expand_test.txt";
    const CliResult r =
        run_cli({"expand", "E2^2", "--order", "3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream body;
    body << in.rdbuf();
    CHECK(qseries_from_text(body.str()) ==
          to_qseries(e2_poly() * e2_poly(), 3));
    std::filesystem::remove(path);
  }

  TEST_CASE("bracket emits the polynomial text") {
    const CliResult r = run_cli({"bracket", "--f", "E2", "--g", "Delta", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(gpoly_from_text(r.out) == delta_poly() * e4_poly());
    CHECK(r.out == to_text(delta_poly() * e4_poly()));
    // widening --s changes the coefficient sequence: (2, -6) instead of (4, -6)
    const CliResult widened = run_cli({"bracket", "--f", "E4", "--g", "E6", "--n", "1", "--k",
                                       "4", "--s", "2", "--l", "6", "--t", "0"});
    CHECK(widened.code == 0);
    CHECK(gpoly_from_text(widened.out) ==
          Rational(2) * (e4_poly() * derive_poly(e6_poly())) -
              Rational(6) * (derive_poly(e4_poly()) * e6_poly()));
    const CliResult bad = run_cli({"bracket", "--f", "E2", "--g", "E4", "--n", "1", "--k", "4"});
    CHECK(bad.code == 2);  // operand weight contradicts the override
    CHECK(contains(bad.err, "error"));
  }

  TEST_CASE("verify selectors") {
    const CliResult chazy = run_cli({"verify", "chazy"});
    CHECK(chazy.code == 0);
    CHECK(contains(chazy.out, "report chazy\n"));
    CHECK(contains(chazy.out, "result pass\n"));
    const CliResult bogus = run_cli({"verify", "bogus"});
    CHECK(bogus.code == 2);
    CHECK(contains(bogus.err, "unknown selector"));
    const CliResult all = run_cli({"verify", "all", "--nmax", "10"});
    CHECK(all.code == 0);
    const std::vector<std::string> names = {"report chazy", "report niebur", "report prop-dern",
                                            "report ramanujan", "report vdp"};
    std::size_t prev = 0;
    for (const std::string& n : names) {
      const std::size_t at = all.out.find(n);
      REQUIRE(at != std::string::npos);
      CHECK(at >= prev);
      prev = at;
    }
  }

  TEST_CASE("decompose prints the canonical decomposition") {
    const CliResult r = run_cli({"decompose", "E2^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "decomposition\nweight 4\nline 12\npart 0 E4\n");
    for (const std::string input : {"E2^2", "E2*E4", "RC(E2, E2, 6)", "D(Delta)"}) {
      const CliResult rt = run_cli({"decompose", input});
      REQUIRE(rt.code == 0);
      CHECK(rebuild_decomposition(rt.out) == expr::eval(*expr::parse(input)).poly());
    }
    CHECK(run_cli({"decompose", "5"}).code == 2);
  }

  TEST_CASE("solve-coeffs prints the coefficient tuple") {
    const CliResult r = run_cli(
        {"solve-coeffs", "--k", "2", "--s", "1", "--l", "2", "--t", "1", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1,-16,36,-16,1)\n");
    const CliResult bad = run_cli(
        {"solve-coeffs", "--k", "2", "--s", "2", "--l", "2", "--t", "1", "--n", "4"});
    CHECK(bad.code == 2);
  }

  TEST_CASE("wz suite") {
    const CliResult r = run_cli({"wz", "--max-N", "5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "wz N=2 checked=2 skipped=2"));
    CHECK(contains(r.out, "wz q2 m=3 pass\n"));
    CHECK(contains(r.out, "wz result pass\n"));
    CHECK(run_cli({"wz", "--max-N", "1"}).code == 2);
  }

  TEST_CASE("tau table") {
    const CliResult r = run_cli({"tau", "--max-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "tau 1 1\ntau 2 -24\ntau 3 252\ntau 4 -1472\ntau 5 4830\n");
  }

  TEST_CASE("error reporting") {
    const CliResult syntax = run_cli({"expand", "E2^^2"});
    CHECK(syntax.code == 2);
    CHECK(contains(syntax.err, "offset 3"));
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    const CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "expand"));
  }
}
