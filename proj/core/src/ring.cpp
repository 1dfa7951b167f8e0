#include "qmrc/ring.hpp"

#include <array>
#include <set>
#include <sstream>
#include <vector>

namespace qmrc {

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.a < 0 || m.b < 0 || m.c < 0) throw std::domain_error("GradedPoly: negative exponent");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly operator*(const GradedPoly& x, const GradedPoly& y) {
  GradedPoly r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_)
      r.add_term(Monomial{mx.a + my.a, mx.b + my.b, mx.c + my.c}, cx * cy);
  return r;
}

GradedPoly operator*(const Rational& c, const GradedPoly& x) {
  GradedPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : x.terms_) r.terms_.emplace(m, c * v);
  return r;
}

bool is_homogeneous(const GradedPoly& p, int w) {
  for (const auto& [m, c] : p.terms())
    if (m.weight() != w) return false;
  return true;
}

int weight_of(const GradedPoly& p) {
  if (p.is_zero()) throw grading_error("weight_of: zero polynomial has no determined weight");
  const int w = p.terms().begin()->first.weight();
  if (!is_homogeneous(p, w)) throw grading_error("weight_of: polynomial is not homogeneous");
  return w;
}

int depth_of(const GradedPoly& p) {
  if (p.is_zero()) return kDepthOfZero;
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.a);
  return d;
}

GradedPoly e2_poly() { return GradedPoly::monomial(Monomial{1, 0, 0}); }
GradedPoly e4_poly() { return GradedPoly::monomial(Monomial{0, 1, 0}); }
GradedPoly e6_poly() { return GradedPoly::monomial(Monomial{0, 0, 1}); }

GradedPoly delta_poly() {
  GradedPoly p;
  p.add_term(Monomial{0, 3, 0}, Rational(1, 1728));
  p.add_term(Monomial{0, 0, 2}, Rational(-1, 1728));
  return p;
}

GradedPoly derive_poly(const GradedPoly& p) {
  // Product rule on each E2^a E4^b E6^c using the generator images.
  GradedPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.a > 0) {
      const Rational f = c * Rational(m.a, 12);
      r.add_term(Monomial{m.a + 1, m.b, m.c}, f);
      r.add_term(Monomial{m.a - 1, m.b + 1, m.c}, -f);
    }
    if (m.b > 0) {
      const Rational f = c * Rational(m.b, 3);
      r.add_term(Monomial{m.a + 1, m.b, m.c}, f);
      r.add_term(Monomial{m.a, m.b - 1, m.c + 1}, -f);
    }
    if (m.c > 0) {
      const Rational f = c * Rational(m.c, 2);
      r.add_term(Monomial{m.a + 1, m.b, m.c}, f);
      r.add_term(Monomial{m.a, m.b + 2, m.c - 1}, -f);
    }
  }
  return r;
}

GradedPoly derive_poly(const GradedPoly& p, unsigned times) {
  GradedPoly r = p;
  for (unsigned i = 0; i < times; ++i) r = derive_poly(r);
  return r;
}

QSeries to_qseries(const GradedPoly& p, long order) {
  int amax = 0, bmax = 0, cmax = 0;
  for (const auto& [m, c] : p.terms()) {
    amax = std::max(amax, m.a);
    bmax = std::max(bmax, m.b);
    cmax = std::max(cmax, m.c);
  }
  // Power tables for each generator, built once per call.
  const auto powers = [order](const QSeries& g, int emax) {
    std::vector<QSeries> t{QSeries::constant(Rational(1), order)};
    for (int e = 1; e <= emax; ++e) t.push_back(mul(t.back(), g));
    return t;
  };
  const std::vector<QSeries> p2 = powers(eisenstein(2, order), amax);
  const std::vector<QSeries> p4 = powers(eisenstein(4, order), bmax);
  const std::vector<QSeries> p6 = powers(eisenstein(6, order), cmax);
  QSeries r(order);
  for (const auto& [m, c] : p.terms())
    r = add(r, scale(c, mul(mul(p2[m.a], p4[m.b]), p6[m.c])));
  return r;
}

Rational constant_term(const GradedPoly& p) {
  Rational r;
  for (const auto& [m, c] : p.terms()) r += c;
  return r;
}

QuasiForm::QuasiForm(GradedPoly poly, int weight, int depth)
    : poly_(std::move(poly)), weight_(weight), depth_(depth) {
  if (weight_ < 0 || weight_ % 2 != 0)
    throw std::domain_error("QuasiForm: weight must be a nonnegative even integer");
  if (depth_ < 0 || 2 * depth_ > weight_)
    throw std::domain_error("QuasiForm: depth bound must satisfy 0 <= s <= k/2");
  if (!is_homogeneous(poly_, weight_))
    throw grading_error("QuasiForm: polynomial is not homogeneous of the declared weight");
  if (depth_of(poly_) > depth_)
    throw std::domain_error("QuasiForm: polynomial exceeds the declared depth bound");
}

QuasiForm QuasiForm::from_poly(const GradedPoly& p) {
  return QuasiForm(p, weight_of(p), std::max(depth_of(p), 0));
}

QuasiForm add(const QuasiForm& f, const QuasiForm& g) {
  if (f.is_zero() && f.weight() != g.weight()) return add(QuasiForm::zero(g.weight()), g);
  if (g.is_zero() && f.weight() != g.weight()) return add(f, QuasiForm::zero(f.weight()));
  if (f.weight() != g.weight())
    throw grading_error("add: weight mismatch: " + std::to_string(f.weight()) + " vs " +
                        std::to_string(g.weight()));
  return QuasiForm(f.poly() + g.poly(), f.weight(),
                   std::min(std::max(f.depth(), g.depth()), f.weight() / 2));
}

QuasiForm sub(const QuasiForm& f, const QuasiForm& g) { return add(f, scale(Rational(-1), g)); }

QuasiForm mul(const QuasiForm& f, const QuasiForm& g) {
  return QuasiForm(f.poly() * g.poly(), f.weight() + g.weight(), f.depth() + g.depth());
}

QuasiForm scale(const Rational& c, const QuasiForm& f) {
  return QuasiForm(c * f.poly(), f.weight(), f.depth());
}

QuasiForm derive(const QuasiForm& f) {
  const int k = f.weight() + 2;
  return QuasiForm(derive_poly(f.poly()), k, std::min(f.depth() + 1, k / 2));
}

QuasiForm derive(const QuasiForm& f, unsigned times) {
  QuasiForm r = f;
  for (unsigned i = 0; i < times; ++i) r = derive(r);
  return r;
}

QSeries to_qseries(const QuasiForm& f, long order) { return to_qseries(f.poly(), order); }

Rational constant_term(const QuasiForm& f) { return constant_term(f.poly()); }

std::string to_text(const GradedPoly& p) {
  std::ostringstream os;
  os << "gpoly\n";
  for (const auto& [m, c] : p.terms())
    os << "term " << m.a << " " << m.b << " " << m.c << " " << c.str() << "\n";
  return os.str();
}

GradedPoly gpoly_from_text(const std::string& text) {
  const auto bad = [](const std::string& why) {
    throw std::invalid_argument("gpoly parse: " + why);
  };
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "gpoly") bad("missing 'gpoly' header");
  GradedPoly p;
  std::set<std::array<int, 3>> seen;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream tl(line);
    std::string tag, value;
    int a, b, c;
    if (!(tl >> tag >> a >> b >> c >> value) || tag != "term") bad("malformed line: " + line);
    std::string extra;
    if (tl >> extra) bad("trailing tokens: " + line);
    if (a < 0 || b < 0 || c < 0) bad("negative exponent: " + line);
    if (!seen.insert({a, b, c}).second) bad("duplicate monomial: " + line);
    p.add_term({a, b, c}, Rational::from_string(value));
  }
  return p;
}

std::string to_expression(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) {
      // A leading minus sign is only valid inside a numeric literal, so a
      // negative first coefficient is always written out, even when it is -1.
      if (neg) mag = c;
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const bool unit_mono = m.a == 0 && m.b == 0 && m.c == 0;
    if (!(mag == Rational(1)) || unit_mono) factors.push_back(mag.str());
    const auto push = [&](const char* g, int e) {
      if (e == 1)
        factors.push_back(g);
      else if (e > 1)
        factors.push_back(std::string(g) + "^" + std::to_string(e));
    };
    push("E2", m.a);
    push("E4", m.b);
    push("E6", m.c);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace qmrc
