#include "qmrc/identities.hpp"

#include "qmrc/brackets.hpp"
#include "qmrc/depth.hpp"
#include "qmrc/numkernel.hpp"
#include "qmrc/qseries.hpp"
#include "qmrc/ring.hpp"
#include "qmrc/spaces.hpp"

#include <sstream>

namespace qmrc {

std::string to_text(const IdentityReport& rep) {
  std::ostringstream os;
  os << "report " << rep.name << "\n";
  if (rep.range) os << "range " << *rep.range << "\n";
  for (const auto& c : rep.checks)
    os << "check " << (c.ok ? "pass" : "fail") << " " << c.description << "\n";
  for (const auto& n : rep.notes) os << "note " << n << "\n";
  os << "result " << (rep.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

namespace {

void push(IdentityReport& rep, std::string what, bool ok) {
  rep.checks.push_back(CheckResult{std::move(what), ok});
}

std::vector<Integer> sigma_table(unsigned h, long nmax) {
  std::vector<Integer> t(nmax + 1);
  for (long n = 1; n <= nmax; ++n) t[n] = sigma(h, n);
  return t;
}

std::vector<Integer> tau_table(long nmax) {
  const QSeries d = delta(nmax);
  std::vector<Integer> t(nmax + 1);
  for (long n = 1; n <= nmax; ++n) {
    const Rational c = d.coeff(n);
    if (!c.is_integer()) throw std::logic_error("tau_table: non-integral coefficient");
    t[n] = c.num();
  }
  return t;
}

}  // namespace

IdentityReport verify_ramanujan(long nmax) {
  if (nmax < 1) throw std::domain_error("verify_ramanujan: range must be positive");
  IdentityReport rep;
  rep.name = "ramanujan";
  rep.range = nmax;

  const GradedPoly e2 = e2_poly(), e4 = e4_poly(), e6 = e6_poly();
  push(rep, "12*D(E2) = E2^2 - E4", Rational(12) * derive_poly(e2) == e2 * e2 - e4);
  push(rep, "3*D(E4) = E2*E4 - E6", Rational(3) * derive_poly(e4) == e2 * e4 - e6);
  push(rep, "2*D(E6) = E2*E6 - E4^2", Rational(2) * derive_poly(e6) == e2 * e6 - e4 * e4);
  push(rep, "72*D^2(E2) = E2^3 - 3*E2*E4 + 2*E6",
       Rational(72) * derive_poly(e2, 2) ==
           e2 * e2 * e2 - Rational(3) * (e2 * e4) + Rational(2) * e6);
  push(rep, "D(Delta) = E2*Delta", derive_poly(delta_poly()) == e2 * delta_poly());

  const QSeries qe2 = eisenstein(2, nmax), qe4 = eisenstein(4, nmax), qe6 = eisenstein(6, nmax);
  push(rep, "q-expansion: 12*D(E2) = E2^2 - E4",
       scale(Rational(12), derive(qe2)) == qe2 * qe2 - qe4);
  push(rep, "q-expansion: 3*D(E4) = E2*E4 - E6",
       scale(Rational(3), derive(qe4)) == qe2 * qe4 - qe6);
  push(rep, "q-expansion: 2*D(E6) = E2*E6 - E4^2",
       scale(Rational(2), derive(qe6)) == qe2 * qe6 - qe4 * qe4);
  return rep;
}

IdentityReport verify_niebur(long nmax) {
  if (nmax < 1) throw std::domain_error("verify_niebur: range must be positive");
  IdentityReport rep;
  rep.name = "niebur";
  rep.range = nmax;

  const GradedPoly e2 = e2_poly();
  const GradedPoly d1 = derive_poly(e2), d2 = derive_poly(d1), d3 = derive_poly(d2),
                   d4 = derive_poly(d3);
  const GradedPoly form = e2 * d4 - Rational(16) * (d1 * d3) + Rational(18) * (d2 * d2);
  push(rep, "E2*D^4(E2) - 16*D(E2)*D^3(E2) + 18*(D^2(E2))^2 = -24*Delta",
       form == Rational(-24) * delta_poly());
  push(rep, "bracket(E2,E2,4) = -48*Delta",
       bracket(QuasiForm::E2(), QuasiForm::E2(), 4).poly() == Rational(-48) * delta_poly());
  push(rep, "q-expansion of the differential form matches -24*Delta",
       to_qseries(form, nmax) == scale(Rational(-24), delta(nmax)));

  const auto s1 = sigma_table(1, nmax);
  const auto tt = tau_table(nmax);
  bool tau_ok = true;
  for (long n = 1; n <= nmax && tau_ok; ++n) {
    Integer rhs = Integer(n) * n * n * n * s1[n];
    Integer conv = 0;
    for (long a = 1; a < n; ++a)
      conv += (35 * Integer(a) * a * a * a - 52 * Integer(a) * a * a * n +
               18 * Integer(a) * a * n * n) *
              s1[a] * s1[n - a];
    rhs -= 24 * conv;
    if (rhs != tt[n]) tau_ok = false;
  }
  push(rep, "tau(n) = n^4*sigma1(n) - 24*sum (35a^4-52a^3n+18a^2n^2)*sigma1(a)*sigma1(n-a)",
       tau_ok);
  rep.notes.push_back(
      "the opposite sign +24*Delta, as sometimes displayed, is inconsistent: it is refuted "
      "by bracket(E2,E2,4) = -48*Delta and by the q-expansion through the checked range");
  return rep;
}

IdentityReport verify_vanderpol(long nmax) {
  if (nmax < 1) throw std::domain_error("verify_vanderpol: range must be positive");
  IdentityReport rep;
  rep.name = "vdp";
  rep.range = nmax;

  const GradedPoly e4 = e4_poly();
  const GradedPoly d1 = derive_poly(e4), d2 = derive_poly(d1);
  push(rep, "4*E4*D^2(E4) - 5*(D(E4))^2 = 960*Delta",
       Rational(4) * (e4 * d2) - Rational(5) * (d1 * d1) == Rational(960) * delta_poly());
  push(rep, "bracket(E4,D(E4),1) = 960*Delta",
       bracket(QuasiForm::E4(), derive(QuasiForm::E4()), 1).poly() ==
           Rational(960) * delta_poly());

  const auto s3 = sigma_table(3, nmax);
  const auto tt = tau_table(nmax);
  bool first_ok = true, second_ok = true;
  for (long n = 1; n <= nmax; ++n) {
    Integer conv1 = 0, conv2 = 0;
    for (long a = 1; a < n; ++a) {
      const Integer ss = s3[a] * s3[n - a];
      conv1 += Integer(a) * (9 * a - 5 * n) * ss;
      conv2 += Integer(2 * n - 3 * a) * (n - 3 * a) * ss;
    }
    const Integer base = Integer(n) * n * s3[n];
    if (base + 60 * conv1 != tt[n]) first_ok = false;
    if (base + 60 * conv2 != tt[n]) second_ok = false;
  }
  push(rep, "tau(n) = n^2*sigma3(n) + 60*sum a*(9a-5n)*sigma3(a)*sigma3(n-a)", first_ok);
  push(rep, "tau(n) = n^2*sigma3(n) + 60*sum (2n-3a)*(n-3a)*sigma3(a)*sigma3(n-a)", second_ok);
  return rep;
}

IdentityReport verify_chazy() {
  IdentityReport rep;
  rep.name = "chazy";

  const QuasiForm e2 = QuasiForm::E2(), dl = QuasiForm::Delta();
  const QuasiForm k = bracket(e2, dl, 1);
  push(rep, "K = bracket(E2,Delta,1) = Delta*E4", k.poly() == delta_poly() * e4_poly());
  const QuasiForm l = bracket(k, dl, 1);
  push(rep, "bracket(K,Delta,1) = 4*Delta^2*E6",
       l.poly() == Rational(4) * (delta_poly() * delta_poly() * e6_poly()));
  push(rep, "E2^3 - 18*E2*D(E2) + 36*D^2(E2) = E6",
       e2_poly() * e2_poly() * e2_poly() - Rational(18) * (e2_poly() * derive_poly(e2_poly())) +
               Rational(36) * derive_poly(e2_poly(), 2) ==
           e6_poly());
  const QuasiForm m = bracket(l, dl, 1);
  push(rep, "bracket(bracket(K,Delta,1),Delta,1) = 24*Delta*K^2",
       m.poly() == Rational(24) * (delta_poly() * k.poly() * k.poly()));
  push(rep, "bracket(Delta^2*E6,Delta,1) = 6*Delta^3*E4^2",
       bracket(QuasiForm::from_poly(delta_poly() * delta_poly() * e6_poly()), dl, 1).poly() ==
           Rational(6) * (delta_poly() * delta_poly() * delta_poly() * e4_poly() * e4_poly()));
  const GradedPoly de2 = derive_poly(e2_poly());
  push(rep, "2*D^3(E2) - 2*E2*D^2(E2) + 3*(D(E2))^2 = 0",
       (Rational(2) * derive_poly(e2_poly(), 3) - Rational(2) * (e2_poly() * derive_poly(e2_poly(), 2)) +
        Rational(3) * (de2 * de2))
           .is_zero());
  return rep;
}

IdentityReport verify_structure(int nmax) {
  if (nmax < 0) throw std::domain_error("verify_structure: range must be nonnegative");
  IdentityReport rep;
  rep.name = "prop-dern";
  rep.range = nmax;

  bool grid_ok = true;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<Summand> summands;
    for (int j = n % 2; j <= n - 4; j += 2) summands.push_back(DerivedCusp{j, 2 * n + 4 - 2 * j});
    summands.push_back(Line{derive(QuasiForm::E4(), n)});
    summands.push_back(Line{derive(QuasiForm::E2(), n + 1)});
    const SpanSolver solver(SpaceSpec(std::move(summands)).generators());
    std::vector<GradedPoly> de2{e2_poly()};
    for (int i = 1; i <= n; ++i) de2.push_back(derive_poly(de2.back()));
    for (int r = 0; r <= n && grid_ok; ++r)
      if (!solver.contains(de2[r] * de2[n - r])) grid_ok = false;
    if (!grid_ok) break;
  }
  push(rep, "D^r(E2)*D^(n-r)(E2) in sum_j D^j Cusp(2n+4-2j) + Q*D^n(E4) + Q*D^(n+1)(E2)",
       grid_ok);

  const QuasiForm e2 = QuasiForm::E2();
  push(rep, "E2^2 = E4 + 12*D(E2)",
       e2_poly() * e2_poly() == e4_poly() + Rational(12) * derive_poly(e2_poly()));
  push(rep, "bracket(E2,E2,2) = -1/5*D^2(E4)",
       bracket(e2, e2, 2).poly() == Rational(-1, 5) * derive_poly(e4_poly(), 2));
  push(rep, "bracket(E2,E2,4) = -48*Delta",
       bracket(e2, e2, 4).poly() == Rational(-48) * delta_poly());
  const auto in_space = [](const QuasiForm& f, std::vector<Summand> s) {
    return membership(f, SpaceSpec(std::move(s))).has_value();
  };
  push(rep, "bracket(E2,E2,6) in Cusp(16) + D^2 Cusp(12)",
       in_space(bracket(e2, e2, 6), {Cusp{16}, DerivedCusp{2, 12}}));
  push(rep, "bracket(E2,E2,8) in Cusp(20) + D^2 Cusp(16)",
       in_space(bracket(e2, e2, 8), {Cusp{20}, DerivedCusp{2, 16}}));
  return rep;
}

}  // namespace qmrc
