#include "qmrc/wz.hpp"

#include "qmrc/brackets.hpp"
#include "qmrc/depth.hpp"
#include "qmrc/numkernel.hpp"
#include "qmrc/spaces.hpp"

namespace qmrc {

Rational wz_alpha(long N, long r) {
  if (N < 0) throw std::domain_error("wz_alpha: N must be nonnegative");
  if (r < 2 || r > N) return Rational();
  Integer v = 2 * binomial(r, 2) * binomial(N, r) * binomial(N, r - 1) * Integer(N + 1 - 2 * r);
  if (r % 2 != 0) v = -v;
  return Rational(v);
}

Rational wz_beta(long N, long r) {
  const Rational a = wz_alpha(N, r);
  return (r % 2 != 0) ? -a : a;
}

std::optional<Rational> certificate_K(long N, long r) {
  if (N < 2) throw std::domain_error("certificate_K: N must be at least 2");
  const Integer den = Integer(N - 2 * r + 1) * Integer(N - r + 1) * Integer(N - r + 2) *
                      Integer(N - 1);
  if (sgn(den) == 0) return std::nullopt;
  const Integer num =
      Integer(r - 2) * Integer(r - 1) * Integer(N + 1) *
      (3 * Integer(N) * N * N + 8 * Integer(N) * N * (1 - r) +
       Integer(N) * (4 * r * r - 6 * r + 3) - 2 * r * r + 4 * r - 2);
  return Rational(num, den);
}

Integer wz_A_direct(long N) {
  if (N < 2) throw std::domain_error("wz_A_direct: N must be at least 2");
  Rational acc;
  for (long r = 2; r <= N; ++r) acc += wz_beta(N, r);
  if (!acc.is_integer()) throw std::logic_error("wz_A_direct: non-integral sum");
  return acc.num();
}

Integer wz_A_closed(long N) {
  if (N < 2) throw std::domain_error("wz_A_closed: N must be at least 2");
  return -Integer(N) * Integer(N - 1) * binomial(2 * N - 2, N - 1);
}

CertificateReport certificate_check(long N) {
  if (N < 2) throw std::domain_error("certificate_check: N must be at least 2");
  CertificateReport rep;
  rep.N = N;
  rep.identities_ok = true;
  const Rational lhs_f1 = Rational(2 * Integer(N + 1) * Integer(2 * N - 1));
  const Rational lhs_f2 = Rational(Integer(N) * Integer(N - 1));
  for (long r = 0; r <= N + 1; ++r) {
    const auto k1 = certificate_K(N, r);
    const auto k2 = certificate_K(N, r + 1);
    if (!k1 || !k2) {
      rep.skipped_r.push_back(r);
      continue;
    }
    const Rational lhs = lhs_f1 * wz_beta(N, r) - lhs_f2 * wz_beta(N + 1, r);
    const Rational rhs = *k2 * wz_beta(N, r + 1) - *k1 * wz_beta(N, r);
    if (lhs != rhs) rep.identities_ok = false;
    rep.checked_r.push_back(r);
  }
  rep.ratio_ok = wz_A_direct(N + 1) * Integer(N) * Integer(N - 1) ==
                 wz_A_direct(N) * 2 * Integer(N + 1) * Integer(2 * N - 1);
  rep.closed_form_ok = wz_A_direct(N) == wz_A_closed(N);
  return rep;
}

bool q2_bracket_check(int m) {
  if (m < 0) throw std::domain_error("q2_bracket_check: m must be nonnegative");
  const int n = 2 * m + 2;
  const QuasiForm e2 = QuasiForm::E2();
  const QuasiForm br = bracket(e2, e2, BracketParams(n, 2, 1, 2, 1));
  const GradedPoly r2 = depth_component(br.poly(), 2);

  std::vector<GradedPoly> de2{e2_poly()};  // D^i E2
  for (int i = 1; i <= n; ++i) de2.push_back(derive_poly(de2.back()));

  GradedPoly rhs = Rational(24 * Integer(n)) * de2[n - 1];
  GradedPoly inner;
  for (int r = 2; r <= n; ++r) {
    Rational c(binomial(n, r) * binomial(n, r) * binomial(r, 2) * binomial(r + 1, 2));
    if (r % 2 != 0) c = -c;
    inner += c * (de2[r - 2] * de2[n - r]);
  }
  for (int r = 1; r <= n - 1; ++r) {
    Rational c(binomial(n, r) * binomial(n, r) * binomial(r + 1, 2) * binomial(n + 1 - r, 2));
    if (r % 2 != 0) c = -c;
    inner += c * (de2[r - 1] * de2[n - 1 - r]);
  }
  rhs += Rational(4) * inner;
  if (!(Rational(144) * r2 == rhs)) return false;
  // The lowest case has a nonzero Eisenstein part, so only the higher orders
  // land in the cusp space.
  if (m >= 1 && !SpanSolver(basis_cusp(4 * m + 4)).contains(r2)) return false;
  return true;
}

}  // namespace qmrc
