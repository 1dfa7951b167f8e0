#include "qmrc/identities.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>

using namespace qmrc;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("ramanujan system") {
    const IdentityReport rep = verify_ramanujan(10);
    CHECK(rep.name == "ramanujan");
    CHECK(rep.pass());
    REQUIRE(rep.range.has_value());
    CHECK(*rep.range == 10);
    CHECK(rep.checks.size() >= 5);
    CHECK_THROWS_AS(verify_ramanujan(0), std::domain_error);
  }

  TEST_CASE("niebur formula") {
    const IdentityReport rep = verify_niebur(10);
    CHECK(rep.name == "niebur");
    CHECK(rep.pass());
    bool has_sign_note = false;
    for (const std::string& n : rep.notes) has_sign_note = has_sign_note || contains(n, "+24");
    CHECK(has_sign_note);
  }

  TEST_CASE("van der pol formulas") {
    const IdentityReport rep = verify_vanderpol(10);
    CHECK(rep.name == "vdp");
    CHECK(rep.pass());
  }

  TEST_CASE("chazy equation") {
    const IdentityReport rep = verify_chazy();
    CHECK(rep.name == "chazy");
    CHECK(rep.pass());
    CHECK(!rep.range.has_value());
    CHECK(rep.checks.size() == 6);
  }

  TEST_CASE("derivative product structure") {
    const IdentityReport rep = verify_structure(4);
    CHECK(rep.name == "prop-dern");
    CHECK(rep.pass());
    CHECK_THROWS_AS(verify_structure(-1), std::domain_error);
  }

  TEST_CASE("report rendering") {
    const std::string chazy = to_text(verify_chazy());
    CHECK(contains(chazy, "report chazy\n"));
    CHECK(contains(chazy, "check pass "));
    CHECK(contains(chazy, "result pass\n"));
    CHECK(!contains(chazy, "range"));
    const std::string ram = to_text(verify_ramanujan(10));
    CHECK(contains(ram, "report ramanujan\n"));
    CHECK(contains(ram, "range 10\n"));
    const std::string nie = to_text(verify_niebur(10));
    CHECK(contains(nie, "note "));
  }
}
