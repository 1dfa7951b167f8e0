#include "qmrc/depth.hpp"

#include "qmrc/numkernel.hpp"

namespace qmrc {

namespace {
Integer pow_ui(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}
}  // namespace

GradedPoly depth_component(const GradedPoly& p, int i) {
  if (i < 0) throw std::domain_error("depth_component: negative index");
  GradedPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.a < i) continue;
    r.add_term(Monomial{m.a - i, m.b, m.c}, Rational(binomial(m.a, i)) * c);
  }
  return r;
}

DepthComponents components(const QuasiForm& f) {
  DepthComponents out{f, {}};
  for (int i = 0; i <= f.depth(); ++i) out.parts.push_back(depth_component(f.poly(), i));
  return out;
}

bool check_first_derivative_law(const QuasiForm& f) {
  const int k = f.weight();
  if (k <= 0) throw std::domain_error("check_first_derivative_law: weight must be positive");
  const GradedPoly df = derive_poly(f.poly());
  for (int i = 0; i <= f.depth() + 1; ++i) {
    GradedPoly rhs = derive_poly(depth_component(f.poly(), i));
    if (i >= 1) rhs += Rational(k - i + 1, 12) * depth_component(f.poly(), i - 1);
    if (!(depth_component(df, i) == rhs)) return false;
  }
  return true;
}

bool check_derivative_power_law(const QuasiForm& f, unsigned r) {
  const int k = f.weight();
  const GradedPoly drf = derive_poly(f.poly(), r);
  for (int i = 0; i <= f.depth() + static_cast<int>(r); ++i) {
    GradedPoly rhs;
    for (int j = 0; j <= std::min<int>(r, i); ++j) {
      const Rational coef = Rational(factorial(j), pow_ui(12, j)) * Rational(binomial(r, j)) *
                            Rational(binomial(k + r - i + j - 1, j));
      rhs += coef * derive_poly(depth_component(f.poly(), i - j), r - j);
    }
    if (!(depth_component(drf, i) == rhs)) return false;
  }
  return true;
}

bool check_top_component_of_power(const QuasiForm& g, unsigned s) {
  if (s < 1) throw std::domain_error("check_top_component_of_power: s must be positive");
  if (depth_of(g.poly()) > 0)
    throw std::domain_error("check_top_component_of_power: input must be free of E2");
  const int k = g.weight() + 2 * static_cast<int>(s);
  const GradedPoly lhs = depth_component(derive_poly(g.poly(), s), s);
  const Rational coef = Rational(factorial(s), pow_ui(12, s)) * Rational(binomial(k - s - 1, s));
  return lhs == coef * g.poly();
}

bool check_product_law(const QuasiForm& f, const QuasiForm& g) {
  const GradedPoly prod = f.poly() * g.poly();
  const int top = f.depth() + g.depth() + 1;  // one past the bound, must vanish there too
  for (int i = 0; i <= top; ++i) {
    GradedPoly rhs;
    for (int j = 0; j <= i; ++j)
      rhs += depth_component(f.poly(), j) * depth_component(g.poly(), i - j);
    if (!(depth_component(prod, i) == rhs)) return false;
  }
  return true;
}

}  // namespace qmrc
