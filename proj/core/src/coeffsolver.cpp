#include "qmrc/coeffsolver.hpp"

#include "qmrc/numkernel.hpp"
#include "qmrc/qseries.hpp"

#include <algorithm>

namespace qmrc {

std::vector<ConstraintIndex> constraint_set(int s, int t, int n) {
  if (s < 0 || t < 0 || n < 0) throw std::domain_error("constraint_set: negative argument");
  std::vector<ConstraintIndex> out;
  for (int u = 0; u <= s; ++u)
    for (int v = 0; v <= t; ++v) {
      const int bound = u + v + n - s - t - 1;
      for (int alpha = 0; alpha <= bound; ++alpha)
        for (int beta = 0; alpha + beta <= bound; ++beta)
          out.push_back(ConstraintIndex{u, v, alpha, beta});
    }
  return out;
}

std::vector<std::vector<Rational>> constraint_matrix(int k, int l, int s, int t, int n) {
  BracketParams params(n, k, s, l, t);  // validates the index data
  (void)params;
  std::vector<std::vector<Rational>> m;
  for (const ConstraintIndex& e : constraint_set(s, t, n)) {
    std::vector<Rational> row;
    row.reserve(n + 1);
    for (int r = 0; r <= n; ++r)
      row.emplace_back(binomial(r, e.alpha) * binomial(n - r, e.beta) *
                       factorial(k + r - e.u - 1) * factorial(l + n - r - e.v - 1));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& m,
                                             std::size_t ncols) {
  for (const auto& row : m)
    if (row.size() != ncols) throw std::domain_error("nullspace: ragged matrix");
  std::vector<std::vector<Rational>> a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < ncols && prow < a.size(); ++col) {
    std::size_t sel = prow;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[prow], a[sel]);
    const Rational inv = Rational(1) / a[prow][col];
    for (std::size_t j = col; j < ncols; ++j) a[prow][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == prow || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[prow][j];
    }
    pivot_col.push_back(col);
    ++prow;
  }
  std::vector<std::vector<Rational>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < ncols; ++col) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> x(ncols);
    x[col] = Rational(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][col];
    basis.push_back(std::move(x));
  }
  return basis;
}

CoeffVector solve_and_confirm(int k, int l, int s, int t, int n) {
  if (n < 1) throw std::domain_error("solve_and_confirm: order must be positive");
  const auto kernel = nullspace(constraint_matrix(k, l, s, t, n), n + 1);
  if (kernel.size() != 1)
    throw std::logic_error("solve_and_confirm: kernel dimension " +
                           std::to_string(kernel.size()) + ", expected 1");
  const CoeffVector closed = rc_coeffs(BracketParams(n, k, s, l, t));
  const std::vector<Rational>& v = kernel.front();
  std::size_t i0 = 0;
  while (i0 < closed.size() && closed[i0].is_zero()) ++i0;
  if (i0 == closed.size() || v[i0].is_zero())
    throw std::logic_error("solve_and_confirm: kernel not proportional to the closed form");
  const Rational ratio = v[i0] / closed[i0];
  for (std::size_t r = 0; r < closed.size(); ++r)
    if (v[r] != ratio * closed[r])
      throw std::logic_error("solve_and_confirm: kernel not proportional to the closed form");
  return closed;
}

bool pi_polynomial_check(int k, int l, int s, int t, int u, int v, int alpha, int beta,
                         long order) {
  if (k <= 0 || k % 2 != 0 || l <= 0 || l % 2 != 0)
    throw std::domain_error("pi_polynomial_check: weights must be positive even integers");
  if (u < 0 || u > s || 2 * s > k || v < 0 || v > t || 2 * t > l)
    throw std::domain_error("pi_polynomial_check: need 0 <= u <= s <= k/2, 0 <= v <= t <= l/2");
  if (alpha < 0 || beta < 0) throw std::domain_error("pi_polynomial_check: negative index");
  const long deg = alpha + beta + s + t - u - v;
  if (order <= deg) throw std::domain_error("pi_polynomial_check: order too small");

  QSeries p1(order), p2(order), q1(order), q2(order), expp(order), expm(order);
  for (long r = 0; r <= order; ++r) {
    const Rational inv_rfac = Rational(Integer(1), factorial(r));
    const Rational sign = (r % 2 == 0) ? Rational(1) : Rational(-1);
    expp.set_coeff(r, inv_rfac);
    expm.set_coeff(r, sign * inv_rfac);
    p1.set_coeff(r, sign * Rational(binomial(k - u - 1 + r, s - u) * binomial(r, alpha)) *
                        inv_rfac);
    p2.set_coeff(r, Rational(binomial(l - v - 1 + r, t - v) * binomial(r, beta)) * inv_rfac);
    if (r >= alpha && r <= s - u + alpha)
      q1.set_coeff(r, sign * Rational(binomial(k + alpha - u - 1, k + r - s - 1) *
                                      binomial(r, alpha)) *
                          inv_rfac);
    if (r >= beta && r <= t - v + beta)
      q2.set_coeff(r, Rational(binomial(l + beta - v - 1, l + r - t - 1) * binomial(r, beta)) *
                          inv_rfac);
  }
  if (!(mul(q1, expm) == p1)) return false;
  if (!(mul(q2, expp) == p2)) return false;
  const QSeries prod = mul(p1, p2);
  long top = -1;
  for (const auto& [e, c] : prod.nonzero_coeffs()) top = std::max(top, e);
  return top == deg;
}

}  // namespace qmrc
