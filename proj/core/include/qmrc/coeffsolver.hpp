#pragma once

#include "qmrc/brackets.hpp"

#include <vector>

namespace qmrc {

struct ConstraintIndex {
  int u, v, alpha, beta;
  friend auto operator<=>(const ConstraintIndex&, const ConstraintIndex&) = default;
};

// E(s,t,n) = { (u,v,alpha,beta) >= 0 : u <= s, v <= t,
//              alpha + beta <= u + v + n - s - t - 1 },
// ordered lexicographically by (u,v,alpha,beta).
std::vector<ConstraintIndex> constraint_set(int s, int t, int n);

// Row (u,v,alpha,beta), column r = 0..n:
//   C(r,alpha) C(n-r,beta) (k+r-u-1)! (l+n-r-v-1)!
std::vector<std::vector<Rational>> constraint_matrix(int k, int l, int s, int t, int n);

// Basis of { x : m x = 0 } for an ncols-wide matrix, via exact row reduction;
// one vector per free column, in column order.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& m,
                                             std::size_t ncols);

// Computes the kernel of the constraint system, checks that it is one
// dimensional and proportional to rc_coeffs, and returns the normalized
// coefficient vector.  Requires n >= 1; any discrepancy raises logic_error.
CoeffVector solve_and_confirm(int k, int l, int s, int t, int n);

// For 0 <= u <= s <= k/2, 0 <= v <= t <= l/2 and alpha, beta >= 0, the
// generating functions
//   P1(X) = sum_{r>=alpha} (-1)^r C(k-u-1+r, s-u) C(r, alpha) X^r / r!
//   P2(X) = sum_{r>=beta}         C(l-v-1+r, t-v) C(r, beta) X^r / r!
// factor as P1 = Q1 e^{-X} and P2 = Q2 e^{X} with polynomial Q1, Q2, and
// P1 P2 is a polynomial of degree alpha + beta + s + t - u - v.  Verifies all
// of this with series truncated at `order`, which must exceed that degree.
bool pi_polynomial_check(int k, int l, int s, int t, int u, int v, int alpha, int beta,
                         long order);

}  // namespace qmrc
