#pragma once

#include "qmrc/qseries.hpp"

#include <limits>
#include <map>
#include <string>

namespace qmrc {

// Exponent triple of E2^a E4^b E6^c.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;
  int weight() const { return 2 * a + 4 * b + 6 * c; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Canonical term order: (a,b,c) lexicographically descending.
struct MonomialDesc {
  bool operator()(const Monomial& x, const Monomial& y) const { return y < x; }
};

struct grading_error : std::domain_error {
  using std::domain_error::domain_error;
};

// depth_of(zero polynomial); stands in for minus infinity.
inline constexpr int kDepthOfZero = std::numeric_limits<int>::min();

// Element of the polynomial ring in E2, E4, E6 with rational coefficients.
// Terms are kept in canonical descending order and zero coefficients are
// never stored, so structural equality is ring equality.
class GradedPoly {
 public:
  GradedPoly() = default;
  static GradedPoly monomial(const Monomial& m, const Rational& c = Rational(1)) {
    GradedPoly p;
    p.add_term(m, c);
    return p;
  }
  static GradedPoly constant(const Rational& c) { return monomial(Monomial{}, c); }

  const std::map<Monomial, Rational, MonomialDesc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
  }
  // Accumulates c onto the coefficient of m, dropping it if the sum is zero.
  void add_term(const Monomial& m, const Rational& c);

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly x, const GradedPoly& y) { return x += y; }
  friend GradedPoly operator-(GradedPoly x, const GradedPoly& y) { return x -= y; }
  friend GradedPoly operator*(const GradedPoly& x, const GradedPoly& y);
  friend GradedPoly operator*(const Rational& c, const GradedPoly& x);
  friend bool operator==(const GradedPoly& x, const GradedPoly& y) {
    return x.terms_ == y.terms_;
  }

 private:
  std::map<Monomial, Rational, MonomialDesc> terms_;
};

// True when every term has weight w (vacuously true for the zero polynomial).
bool is_homogeneous(const GradedPoly& p, int w);

// The common weight of all terms.  Inhomogeneous input is rejected, and so is
// the zero polynomial, whose weight is not determined.
int weight_of(const GradedPoly& p);

// Largest E2-exponent present; kDepthOfZero for the zero polynomial.
int depth_of(const GradedPoly& p);

// Generator polynomials.
GradedPoly e2_poly();
GradedPoly e4_poly();
GradedPoly e6_poly();
// (E4^3 - E6^2)/1728.
GradedPoly delta_poly();

// The weight-raising derivation determined by
//   D E2 = (E2^2 - E4)/12, D E4 = (E2 E4 - E6)/3, D E6 = (E2 E6 - E4^2)/2,
// extended by linearity and the product rule.  Matches q d/dq on expansions.
GradedPoly derive_poly(const GradedPoly& p);
GradedPoly derive_poly(const GradedPoly& p, unsigned times);

// Substitutes the q-expansions of the generators, truncated at `order`.
QSeries to_qseries(const GradedPoly& p, long order);

// Sum of coefficients, i.e. the value at E2 = E4 = E6 = 1 (the constant term
// of the q-expansion).
Rational constant_term(const GradedPoly& p);

// A homogeneous polynomial together with its declared weight and a depth
// bound.  The stored depth is a bound; the exact depth of the underlying
// polynomial can always be recomputed with depth_of.
class QuasiForm {
 public:
  // Requires: k >= 0 even, 0 <= s <= k/2, poly homogeneous of weight k (the
  // zero polynomial is allowed at any weight), depth_of(poly) <= s.
  QuasiForm(GradedPoly poly, int weight, int depth);

  // Exact weight and depth read off a nonzero polynomial.
  static QuasiForm from_poly(const GradedPoly& p);
  static QuasiForm zero(int weight) { return QuasiForm(GradedPoly(), weight, 0); }
  static QuasiForm constant(const Rational& c) {
    return QuasiForm(GradedPoly::constant(c), 0, 0);
  }
  static QuasiForm E2() { return QuasiForm(e2_poly(), 2, 1); }
  static QuasiForm E4() { return QuasiForm(e4_poly(), 4, 0); }
  static QuasiForm E6() { return QuasiForm(e6_poly(), 6, 0); }
  static QuasiForm Delta() { return QuasiForm(delta_poly(), 12, 0); }

  const GradedPoly& poly() const { return poly_; }
  int weight() const { return weight_; }
  int depth() const { return depth_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend bool operator==(const QuasiForm& x, const QuasiForm& y) {
    return x.weight_ == y.weight_ && x.poly_ == y.poly_;
  }

 private:
  GradedPoly poly_;
  int weight_;
  int depth_;
};

// Weights must agree unless one operand is zero, which adapts to the other.
QuasiForm add(const QuasiForm& f, const QuasiForm& g);
QuasiForm sub(const QuasiForm& f, const QuasiForm& g);
QuasiForm mul(const QuasiForm& f, const QuasiForm& g);
QuasiForm scale(const Rational& c, const QuasiForm& f);
QuasiForm derive(const QuasiForm& f);
QuasiForm derive(const QuasiForm& f, unsigned times);
QSeries to_qseries(const QuasiForm& f, long order);
Rational constant_term(const QuasiForm& f);

// Line-oriented text form:
//   gpoly
//   term a b c p/q     (canonical descending term order)
// Round-trips are bit-exact.
std::string to_text(const GradedPoly& p);
GradedPoly gpoly_from_text(const std::string& text);

// Human-readable rendering, e.g. "E4 + 12*D(E2)" is *not* produced here;
// this is the plain monomial form "-1/5*E2^2*E4 + 7*E6".  The output parses
// back through the expression grammar of the command-line front end.
std::string to_expression(const GradedPoly& p);

}  // namespace qmrc
