#pragma once

#include "qmrc/rational.hpp"

#include <map>
#include <string>

namespace qmrc {

// Truncated q-expansion: rational coefficients tracked for exponents
// 0..order() inclusive.  Zero coefficients are never stored.  Binary
// operations truncate to the smaller order of the two operands.
class QSeries {
 public:
  explicit QSeries(long order) : order_(order) {
    if (order < 0) throw std::domain_error("QSeries: negative order");
  }
  static QSeries constant(const Rational& c, long order) {
    QSeries s(order);
    s.set_coeff(0, c);
    return s;
  }

  long order() const { return order_; }

  // Coefficient of q^n; asking beyond the tracked range is an error.
  Rational coeff(long n) const {
    require_tracked(n);
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rational() : it->second;
  }
  void set_coeff(long n, const Rational& c) {
    require_tracked(n);
    if (c.is_zero())
      coeffs_.erase(n);
    else
      coeffs_[n] = c;
  }

  const std::map<long, Rational>& nonzero_coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Structural equality: same order and identical coefficient tables.
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_tracked(long n) const {
    if (n < 0 || n > order_)
      throw std::out_of_range("QSeries: exponent " + std::to_string(n) +
                              " outside tracked range [0," + std::to_string(order_) + "]");
  }

  long order_;
  std::map<long, Rational> coeffs_;
};

// Coefficient-wise agreement on the common tracked range [0, min(order)].
bool agree(const QSeries& a, const QSeries& b);

// Arithmetic; results have order min(a.order, b.order).
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const Rational& c, const QSeries& a);
QSeries pow(const QSeries& a, unsigned e);

// q d/dq: multiplies the coefficient of q^n by n.
QSeries derive(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

// Weight-h Eisenstein series 1 - (2h/B_h) sum sigma_{h-1}(n) q^n, for even
// h >= 2.  eisenstein(2) = 1 - 24q - 72q^2 - ...
QSeries eisenstein(unsigned h, long order);

// The discriminant cusp form (E4^3 - E6^2)/1728 = q - 24q^2 + 252q^3 - ...
QSeries delta(long order);

// Coefficient of q^n in delta; always an integer.  Requires n >= 1.
Integer tau(unsigned long n);

// Line-oriented text form:
//   qseries
//   order N
//   coeff n p/q        (one line per exponent 0..N, in increasing order)
// Parsing accepts coeff lines for any subset of exponents, in any order,
// without duplicates; round-trips are bit-exact.
std::string to_text(const QSeries& s);
QSeries qseries_from_text(const std::string& text);

}  // namespace qmrc
