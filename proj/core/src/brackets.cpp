#include "qmrc/brackets.hpp"

#include "qmrc/numkernel.hpp"
#include "qmrc/spaces.hpp"

#include <algorithm>

namespace qmrc {

BracketParams::BracketParams(int n_, int k_, int s_, int l_, int t_)
    : n(n_), k(k_), s(s_), l(l_), t(t_) {
  if (n < 0) throw std::domain_error("BracketParams: order must be nonnegative");
  if (k <= 0 || k % 2 != 0 || l <= 0 || l % 2 != 0)
    throw std::domain_error("BracketParams: weights must be positive even integers");
  if (s < 0 || 2 * s > k || t < 0 || 2 * t > l)
    throw std::domain_error("BracketParams: depth bounds must satisfy 0 <= s <= k/2, 0 <= t <= l/2");
}

CoeffVector rc_coeffs(const BracketParams& p) {
  CoeffVector out;
  out.reserve(p.n + 1);
  for (int r = 0; r <= p.n; ++r) {
    Integer v = binomial(p.k - p.s + p.n - 1, p.n - r) * binomial(p.l - p.t + p.n - 1, r);
    if (r % 2 != 0) v = -v;
    out.emplace_back(v);
  }
  return out;
}

namespace {
int exact_depth(const QuasiForm& f) { return std::max(depth_of(f.poly()), 0); }
}  // namespace

QuasiForm bracket(const QuasiForm& f, const QuasiForm& g, const BracketParams& p) {
  if (f.weight() != p.k || g.weight() != p.l)
    throw std::domain_error("bracket: operand weights do not match the parameters");
  if (depth_of(f.poly()) > p.s || depth_of(g.poly()) > p.t)
    throw std::domain_error("bracket: operand depth exceeds the parameter bound");
  const CoeffVector a = rc_coeffs(p);
  std::vector<GradedPoly> df{f.poly()}, dg{g.poly()};
  for (int r = 1; r <= p.n; ++r) {
    df.push_back(derive_poly(df.back()));
    dg.push_back(derive_poly(dg.back()));
  }
  GradedPoly sum;
  for (int r = 0; r <= p.n; ++r) sum += a[r] * (df[r] * dg[p.n - r]);
  if (depth_of(sum) > p.s + p.t)
    throw std::logic_error("bracket: result depth exceeds s+t");  // falsifies the depth bound
  return QuasiForm(std::move(sum), p.k + p.l + 2 * p.n, std::min(p.s + p.t, (p.k + p.l + 2 * p.n) / 2));
}

QuasiForm bracket(const QuasiForm& f, const QuasiForm& g, int n) {
  return bracket(f, g, BracketParams(n, f.weight(), exact_depth(f), g.weight(), exact_depth(g)));
}

bool check_leibniz(const QuasiForm& f, const QuasiForm& g, int n) {
  const int k = f.weight(), l = g.weight();
  const int s = exact_depth(f), t = exact_depth(g);
  const QuasiForm lhs = derive(bracket(f, g, BracketParams(n, k, s, l, t)));
  const QuasiForm rhs =
      add(bracket(derive(f), g, BracketParams(n, k + 2, s + 1, l, t)),
          bracket(f, derive(g), BracketParams(n, k, s, l + 2, t + 1)));
  return lhs.poly() == rhs.poly();
}

QuasiForm delta_factor(const QuasiForm& f, const QuasiForm& g, int n) {
  const QuasiForm dg = mul(QuasiForm::Delta(), g);
  const int s = exact_depth(f), t = exact_depth(g);
  const QuasiForm phi =
      bracket(f, dg, BracketParams(n, f.weight(), s, dg.weight(), exact_depth(dg)));
  const int hw = f.weight() + g.weight() + 2 * n;
  const std::vector<GradedPoly> hbasis = monomial_basis(hw, std::min(s + t, hw / 2));
  std::vector<GradedPoly> gens;
  gens.reserve(hbasis.size());
  const GradedPoly d = delta_poly();
  for (const GradedPoly& m : hbasis) gens.push_back(d * m);
  const auto coords = solve_in_span(phi.poly(), gens);
  if (!coords) throw std::logic_error("delta_factor: no factorization exists");
  GradedPoly h;
  for (std::size_t i = 0; i < hbasis.size(); ++i) h += (*coords)[i] * hbasis[i];
  return QuasiForm(std::move(h), hw, std::min(s + t, hw / 2));
}

}  // namespace qmrc
