#include "qmrc/rational.hpp"

#include <ostream>

namespace qmrc {

Rational Rational::from_string(const std::string& text) {
  const auto bad = [&](const char* why) {
    throw std::invalid_argument(std::string("Rational: cannot parse \"") + text + "\": " + why);
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) bad("expected digits");
  Integer num(text.substr(0, i));
  if (i == text.size()) return Rational(num);
  if (text[i] != '/') bad("expected '/'");
  ++i;
  std::size_t den_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == den_begin || i != text.size()) bad("expected denominator digits");
  Integer den(text.substr(den_begin));
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("pow: zero base with negative exponent");
    return Rational(1) / pow(base, -e);
  }
  Rational acc(1), b = base;
  for (long n = e; n > 0; n >>= 1) {
    if (n & 1) acc *= b;
    if (n > 1) b *= b;
  }
  return acc;
}

}  // namespace qmrc
