#include "qmrc/ring.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace qmrc;

namespace {

GradedPoly random_homogeneous(std::mt19937& rng, int weight) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  GradedPoly p;
  for (int a = 0; 2 * a <= weight; ++a)
    for (int b = 0; 2 * a + 4 * b <= weight; ++b) {
      const int rem = weight - 2 * a - 4 * b;
      if (rem % 6 != 0) continue;
      p.add_term({a, b, rem / 6}, Rational(num(rng), den(rng)));
    }
  return p;
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("monomial weight") {
    CHECK(Monomial{1, 0, 0}.weight() == 2);
    CHECK(Monomial{0, 1, 0}.weight() == 4);
    CHECK(Monomial{0, 0, 1}.weight() == 6);
    CHECK(Monomial{2, 3, 1}.weight() == 22);
  }

  TEST_CASE("add_term accumulates and drops zeros") {
    GradedPoly p;
    p.add_term({1, 0, 0}, Rational(2, 3));
    p.add_term({1, 0, 0}, Rational(1, 3));
    CHECK(p.coeff({1, 0, 0}) == Rational(1));
    p.add_term({1, 0, 0}, Rational(-1));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK_THROWS_AS(p.add_term({-1, 0, 0}, Rational(1)), std::domain_error);
  }

  TEST_CASE("grading queries") {
    const GradedPoly e2sq = e2_poly() * e2_poly();
    CHECK(is_homogeneous(e2sq, 4));
    CHECK(weight_of(e2sq) == 4);
    CHECK(depth_of(e2sq) == 2);
    CHECK(depth_of(e4_poly()) == 0);
    CHECK(depth_of(GradedPoly{}) == kDepthOfZero);
    CHECK_THROWS_AS(weight_of(GradedPoly{}), grading_error);
    CHECK_THROWS_AS(weight_of(e2_poly() + e4_poly()), grading_error);
    CHECK(is_homogeneous(GradedPoly{}, 0));
    CHECK(is_homogeneous(GradedPoly{}, 10));
  }

  TEST_CASE("terms iterate in canonical descending order") {
    GradedPoly p;
    p.add_term({0, 0, 1}, Rational(1));
    p.add_term({3, 0, 0}, Rational(1));
    p.add_term({1, 1, 0}, Rational(1));
    std::vector<Monomial> order;
    for (const auto& [m, c] : p.terms()) order.push_back(m);
    CHECK(order == std::vector<Monomial>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  }

  TEST_CASE("derivation sends generators to the classical images") {
    const Rational tw(1, 12);
    const GradedPoly de2 = derive_poly(e2_poly());
    CHECK(de2 == tw * (e2_poly() * e2_poly() - e4_poly()));
    const GradedPoly de4 = derive_poly(e4_poly());
    CHECK(de4 == Rational(1, 3) * (e2_poly() * e4_poly() - e6_poly()));
    const GradedPoly de6 = derive_poly(e6_poly());
    CHECK(de6 == Rational(1, 2) * (e2_poly() * e6_poly() - e4_poly() * e4_poly()));
    CHECK(derive_poly(delta_poly()) == e2_poly() * delta_poly());
  }

  TEST_CASE("derivation satisfies the Leibniz rule") {
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 20; ++trial) {
      const GradedPoly f = random_homogeneous(rng, 8), g = random_homogeneous(rng, 10);
      CHECK(derive_poly(f * g) == derive_poly(f) * g + f * derive_poly(g));
    }
    CHECK(derive_poly(e4_poly(), 2) == derive_poly(derive_poly(e4_poly())));
    CHECK(derive_poly(GradedPoly::constant(Rational(5))).is_zero());
  }

  TEST_CASE("expansion of polynomials matches series arithmetic") {
    const QSeries s = to_qseries(e2_poly() * e2_poly(), 2);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == Rational(-48));
    CHECK(s.coeff(2) == Rational(432));
    const QSeries d = to_qseries(delta_poly(), 2);
    CHECK(d.coeff(0) == Rational(0));
    CHECK(d.coeff(1) == Rational(1));
    CHECK(d.coeff(2) == Rational(-24));
    std::mt19937 rng(5);
    const GradedPoly f = random_homogeneous(rng, 12), g = random_homogeneous(rng, 8);
    CHECK(to_qseries(f * g, 12) == mul(to_qseries(f, 12), to_qseries(g, 12)));
    CHECK(to_qseries(f + GradedPoly::constant(Rational(0)), 6) == to_qseries(f, 6));
    CHECK(to_qseries(derive_poly(f), 11) == derive(to_qseries(f, 11)));
  }

  TEST_CASE("constant term") {
    CHECK(constant_term(e2_poly() * e6_poly()) == Rational(1));
    CHECK(constant_term(delta_poly()) == Rational(0));
    CHECK(constant_term(GradedPoly::constant(Rational(-7, 2))) == Rational(-7, 2));
  }

  TEST_CASE("quasiform constructor validates the certificate") {
    CHECK_NOTHROW(QuasiForm(e2_poly(), 2, 1));
    CHECK_THROWS_AS(QuasiForm(e2_poly(), 3, 1), std::domain_error);  // odd weight
    CHECK_THROWS_AS(QuasiForm(e2_poly(), 4, 1), grading_error);      // wrong weight
    CHECK_THROWS_AS(QuasiForm(e2_poly(), 2, 0), std::domain_error);  // poly deeper than bound
    CHECK_THROWS_AS(QuasiForm(e4_poly(), 4, 3), std::domain_error);  // bound > k/2
    CHECK_THROWS_AS(QuasiForm(e2_poly() + e4_poly(), 4, 2), grading_error);
    CHECK_NOTHROW(QuasiForm(GradedPoly{}, 8, 4));  // zero carries any grading
    const QuasiForm f = QuasiForm::from_poly(e2_poly() * e4_poly());
    CHECK(f.weight() == 6);
    CHECK(f.depth() == 1);
    CHECK(QuasiForm::from_poly(GradedPoly::constant(Rational(3))).weight() == 0);
  }

  TEST_CASE("quasiform arithmetic tracks weight and depth") {
    const QuasiForm p = mul(QuasiForm::E2(), QuasiForm::E4());
    CHECK(p.weight() == 6);
    CHECK(p.depth() == 1);
    const QuasiForm d = derive(QuasiForm::E4());
    CHECK(d.weight() == 6);
    CHECK(d.depth() == 1);
    CHECK(derive(QuasiForm::E2()).depth() == 2);  // D(E2) = (E2^2 - E4)/12
    CHECK(derive(QuasiForm::Delta(), 3).weight() == 18);
    CHECK_THROWS_AS(add(QuasiForm::E4(), QuasiForm::E6()), grading_error);
    // a zero operand adapts to the other side's weight
    const QuasiForm z = QuasiForm::zero(4);
    CHECK(add(z, QuasiForm::E6()).weight() == 6);
    CHECK(sub(QuasiForm::E6(), QuasiForm::zero(2)).weight() == 6);
    CHECK(scale(Rational(0), QuasiForm::E4()).is_zero());
    CHECK(constant_term(mul(QuasiForm::E2(), QuasiForm::E2())) == Rational(1));
    CHECK(agree(to_qseries(QuasiForm::Delta(), 4), delta(4)));
  }

  TEST_CASE("polynomial text round-trips bit-exactly") {
    std::mt19937 rng(31);
    for (int w : {0, 2, 8, 14}) {
      const GradedPoly p = random_homogeneous(rng, w);
      CHECK(gpoly_from_text(to_text(p)) == p);
    }
    const GradedPoly mixed = e2_poly() + Rational(-3, 7) * e6_poly();
    CHECK(gpoly_from_text(to_text(mixed)) == mixed);
    CHECK(gpoly_from_text(to_text(GradedPoly{})) == GradedPoly{});
    const std::string txt = to_text(delta_poly());
    CHECK(txt.find("gpoly\n") == 0);
    CHECK(txt.find("term 0 3 0 1/1728") != std::string::npos);
    CHECK(txt.find("term 0 0 2 -1/1728") != std::string::npos);
  }

  TEST_CASE("malformed polynomial text is rejected") {
    CHECK_THROWS_AS(gpoly_from_text("term 1 0 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(gpoly_from_text("gpoly\nterm 1 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(gpoly_from_text("gpoly\nterm -1 0 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(gpoly_from_text("gpoly\nterm 1 0 0 1\nterm 1 0 0 2\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(gpoly_from_text("gpoly\nterm 1 0 0 1/0\n"), std::domain_error);
  }

  TEST_CASE("expression rendering stays inside the input grammar") {
    CHECK(to_expression(e2_poly() * e2_poly()) == "E2^2");
    CHECK(to_expression(delta_poly()) == "1/1728*E4^3 - 1/1728*E6^2");
    CHECK(to_expression(Rational(-1) * delta_poly()) == "-1/1728*E4^3 + 1/1728*E6^2");
    CHECK(to_expression(GradedPoly{}) == "0");
    CHECK(to_expression(GradedPoly::constant(Rational(5, 2))) == "5/2");
    CHECK(to_expression(Rational(-1) * e4_poly()) == "-1*E4");
    GradedPoly p;
    p.add_term({1, 1, 0}, Rational(1));
    p.add_term({0, 0, 1}, Rational(-7));
    CHECK(to_expression(p) == "E2*E4 - 7*E6");
  }
}
