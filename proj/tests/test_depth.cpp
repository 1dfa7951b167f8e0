#include "qmrc/depth.hpp"

#include <doctest.h>

#include <random>

using namespace qmrc;

namespace {

GradedPoly random_homogeneous(std::mt19937& rng, int weight) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
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

TEST_SUITE("depth") {
  TEST_CASE("components are the E2-shift coefficients") {
    CHECK(depth_component(e2_poly(), 0) == e2_poly());
    CHECK(depth_component(e2_poly(), 1) == GradedPoly::constant(Rational(1)));
    const GradedPoly e2sq = e2_poly() * e2_poly();
    CHECK(depth_component(e2sq, 0) == e2sq);
    CHECK(depth_component(e2sq, 1) == Rational(2) * e2_poly());
    CHECK(depth_component(e2sq, 2) == GradedPoly::constant(Rational(1)));
    CHECK(depth_component(delta_poly(), 0) == delta_poly());
    CHECK(depth_component(delta_poly(), 1).is_zero());
    CHECK_THROWS_AS(depth_component(e2_poly(), -1), std::domain_error);
  }

  TEST_CASE("components vanish beyond the depth and each drops weight by 2i") {
    std::mt19937 rng(404);
    const GradedPoly p = random_homogeneous(rng, 12);
    const int s = depth_of(p);
    for (int i = 0; i <= s; ++i) {
      const GradedPoly r = depth_component(p, i);
      if (!r.is_zero()) {
        CHECK(weight_of(r) == 12 - 2 * i);
        CHECK(depth_of(r) <= s - i);
      }
    }
    CHECK(depth_component(p, s + 1).is_zero());
    CHECK(depth_component(p, s + 5).is_zero());
  }

  TEST_CASE("shift identity reconstructs the polynomial") {
    // Substituting E2 -> E2 + E2 must give sum_i R_i(p) * E2^i evaluated,
    // checked here in the equivalent form p = sum_i R_i(p) * 0^i at shift 0
    // plus the binomial case p(2*E2): verified coefficientwise for E2^3.
    const GradedPoly e2 = e2_poly();
    const GradedPoly cube = e2 * e2 * e2;
    CHECK(depth_component(cube, 0) == cube);
    CHECK(depth_component(cube, 1) == Rational(3) * (e2 * e2));
    CHECK(depth_component(cube, 2) == Rational(3) * e2);
    CHECK(depth_component(cube, 3) == GradedPoly::constant(Rational(1)));
  }

  TEST_CASE("components() packages all parts up to the depth") {
    const DepthComponents dc = components(QuasiForm::from_poly(e2_poly() * e4_poly()));
    REQUIRE(dc.parts.size() == 2);
    CHECK(dc.parts[0] == e2_poly() * e4_poly());
    CHECK(dc.parts[1] == e4_poly());
    CHECK(components(QuasiForm::Delta()).parts.size() == 1);
  }

  TEST_CASE("first derivative law") {
    // R_1(D E2) = E2/6: D E2 = (E2^2 - E4)/12, and R_1 of that is 2*E2/12.
    CHECK(depth_component(derive_poly(e2_poly()), 1) == Rational(1, 6) * e2_poly());
    for (const QuasiForm& f :
         {QuasiForm::E2(), QuasiForm::from_poly(e2_poly() * e2_poly()), QuasiForm::Delta(),
          QuasiForm::from_poly(e2_poly() * e4_poly()), QuasiForm::E6()})
      CHECK(check_first_derivative_law(f));
    CHECK_THROWS_AS(check_first_derivative_law(QuasiForm::constant(Rational(1))),
                    std::domain_error);
  }

  TEST_CASE("iterated derivative law") {
    for (unsigned r = 1; r <= 4; ++r) CHECK(check_derivative_power_law(QuasiForm::E2(), r));
    CHECK(check_derivative_power_law(QuasiForm::Delta(), 3));
    CHECK(check_derivative_power_law(QuasiForm::from_poly(e2_poly() * e2_poly()), 2));
    const QuasiForm cube = QuasiForm::from_poly(e2_poly() * e2_poly() * e2_poly());
    for (unsigned r = 1; r <= 3; ++r) CHECK(check_derivative_power_law(cube, r));
    std::mt19937 rng(11);
    for (int w : {8, 10, 12})
      CHECK(check_derivative_power_law(QuasiForm::from_poly(random_homogeneous(rng, w)), 2));
  }

  TEST_CASE("top component of an iterated derivative of a modular form") {
    CHECK(depth_component(derive_poly(e4_poly()), 1) == Rational(1, 3) * e4_poly());
    CHECK(check_top_component_of_power(QuasiForm::E4(), 1));
    CHECK(check_top_component_of_power(QuasiForm::Delta(), 2));
    for (unsigned s = 1; s <= 3; ++s) CHECK(check_top_component_of_power(QuasiForm::E6(), s));
    CHECK(check_top_component_of_power(QuasiForm::constant(Rational(1)), 1));
    CHECK_THROWS_AS(check_top_component_of_power(QuasiForm::E4(), 0), std::domain_error);
    CHECK_THROWS_AS(check_top_component_of_power(QuasiForm::E2(), 1), std::domain_error);
  }

  TEST_CASE("product law") {
    CHECK(check_product_law(QuasiForm::E2(), QuasiForm::E2()));
    CHECK(check_product_law(QuasiForm::E2(), QuasiForm::Delta()));
    std::mt19937 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
      const QuasiForm f = QuasiForm::from_poly(random_homogeneous(rng, 8));
      const QuasiForm g = QuasiForm::from_poly(random_homogeneous(rng, 6));
      CHECK(check_product_law(f, g));
    }
  }
}
