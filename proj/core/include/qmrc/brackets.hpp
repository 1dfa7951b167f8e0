#pragma once

#include "qmrc/ring.hpp"

#include <vector>

namespace qmrc {

// Index data of a depth-graded Rankin-Cohen bracket: order n, first slot of
// weight k and depth bound s, second slot of weight l and depth bound t.
struct BracketParams {
  int n, k, s, l, t;
  BracketParams(int n, int k, int s, int l, int t);
};

using CoeffVector = std::vector<Rational>;

// The n+1 coefficients a_r = (-1)^r C(k-s+n-1, n-r) C(l-t+n-1, r), r = 0..n.
CoeffVector rc_coeffs(const BracketParams& p);

// sum_r a_r D^r f D^{n-r} g with the coefficients above.  The overload
// without explicit parameters reads k, l and the exact depths off the
// operands; both require positive weights.  The result has weight k+l+2n and
// satisfies the depth bound s+t, which is asserted on every call.
QuasiForm bracket(const QuasiForm& f, const QuasiForm& g, const BracketParams& p);
QuasiForm bracket(const QuasiForm& f, const QuasiForm& g, int n);

// D[f,g] = [Df, g] + [f, Dg] where the three brackets use matching
// parameter sets (s+1 and t+1 on the derived slots).
bool check_leibniz(const QuasiForm& f, const QuasiForm& g, int n);

// The unique h with  bracket(f, Delta*g, n) = Delta * h  (same parameters on
// the left as bracket(f, Delta*g, n) with exact depths).  h is found by
// membership solving; its absence would falsify the factorization and raises
// logic_error.
QuasiForm delta_factor(const QuasiForm& f, const QuasiForm& g, int n);

}  // namespace qmrc
