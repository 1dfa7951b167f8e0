#include "qmrc/qseries.hpp"

#include "qmrc/numkernel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qmrc {

bool agree(const QSeries& a, const QSeries& b) {
  const long n = std::min(a.order(), b.order());
  for (long i = 0; i <= n; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

QSeries add(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  for (const auto& [n, c] : a.nonzero_coeffs())
    if (n <= r.order()) r.set_coeff(n, c);
  for (const auto& [n, c] : b.nonzero_coeffs())
    if (n <= r.order()) r.set_coeff(n, r.coeff(n) + c);
  return r;
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, scale(Rational(-1), b)); }

QSeries mul(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  std::map<long, Rational> acc;
  for (const auto& [i, ca] : a.nonzero_coeffs()) {
    if (i > r.order()) break;
    for (const auto& [j, cb] : b.nonzero_coeffs()) {
      if (i + j > r.order()) break;
      acc[i + j] += ca * cb;
    }
  }
  for (const auto& [n, c] : acc) r.set_coeff(n, c);
  return r;
}

QSeries scale(const Rational& c, const QSeries& a) {
  QSeries r(a.order());
  if (c.is_zero()) return r;
  for (const auto& [n, v] : a.nonzero_coeffs()) r.set_coeff(n, c * v);
  return r;
}

QSeries pow(const QSeries& a, unsigned e) {
  QSeries acc = QSeries::constant(Rational(1), a.order());
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

QSeries derive(const QSeries& a) {
  QSeries r(a.order());
  for (const auto& [n, c] : a.nonzero_coeffs()) r.set_coeff(n, Rational(Integer(n)) * c);
  return r;
}

QSeries eisenstein(unsigned h, long order) {
  if (h < 2 || h % 2 != 0) throw std::domain_error("eisenstein: weight must be even and >= 2");
  QSeries r(order);
  r.set_coeff(0, Rational(1));
  const Rational factor = Rational(Integer(-2L * h)) / bernoulli(h);
  for (long n = 1; n <= order; ++n)
    r.set_coeff(n, factor * Rational(sigma(h - 1, static_cast<unsigned long>(n))));
  return r;
}

QSeries delta(long order) {
  const QSeries e4 = eisenstein(4, order);
  const QSeries e6 = eisenstein(6, order);
  return scale(Rational(1, 1728), sub(mul(mul(e4, e4), e4), mul(e6, e6)));
}

Integer tau(unsigned long n) {
  if (n < 1) throw std::domain_error("tau: argument must be positive");
  const Rational c = delta(static_cast<long>(n)).coeff(static_cast<long>(n));
  if (!c.is_integer()) throw std::logic_error("tau: non-integral coefficient");
  return c.num();
}

std::string to_text(const QSeries& s) {
  std::ostringstream os;
  os << "qseries\n";
  os << "order " << s.order() << "\n";
  for (long n = 0; n <= s.order(); ++n) os << "coeff " << n << " " << s.coeff(n).str() << "\n";
  return os.str();
}

QSeries qseries_from_text(const std::string& text) {
  const auto bad = [](const std::string& why) {
    throw std::invalid_argument("qseries parse: " + why);
  };
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "qseries") bad("missing 'qseries' header");
  if (!std::getline(is, line)) bad("missing 'order' line");
  std::istringstream ol(line);
  std::string tag;
  long order = -1;
  if (!(ol >> tag >> order) || tag != "order" || order < 0) bad("malformed 'order' line");
  QSeries r(order);
  std::set<long> seen;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream cl(line);
    std::string ctag, value;
    long n = -1;
    if (!(cl >> ctag >> n >> value) || ctag != "coeff") bad("malformed line: " + line);
    std::string extra;
    if (cl >> extra) bad("trailing tokens: " + line);
    if (n < 0 || n > order) bad("exponent out of range: " + line);
    if (!seen.insert(n).second) bad("duplicate exponent " + std::to_string(n));
    r.set_coeff(n, Rational::from_string(value));
  }
  return r;
}

}  // namespace qmrc
