#pragma once

#include "qmrc/rational.hpp"

#include <optional>
#include <vector>

namespace qmrc {

// alpha_r(N) = 2 (-1)^r C(r,2) C(N,r) C(N,r-1) (N+1-2r); zero outside
// 2 <= r <= N.
Rational wz_alpha(long N, long r);

// beta_r(N) = (-1)^r alpha_r(N) = |alpha_r(N)| sign(N+1-2r).
Rational wz_beta(long N, long r);

// K(N,r) = (r-2)(r-1)(N+1)[3N^3 + 8N^2(1-r) + N(4r^2-6r+3) - 2r^2 + 4r - 2]
//          / ((N-2r+1)(N-r+1)(N-r+2)(N-1)),
// or nullopt where the denominator vanishes.  Requires N >= 2.
std::optional<Rational> certificate_K(long N, long r);

// sum_r beta_r(N), exactly.
Integer wz_A_direct(long N);

// -N(N-1) C(2N-2, N-1).
Integer wz_A_closed(long N);

struct CertificateReport {
  long N = 0;
  std::vector<long> checked_r;
  std::vector<long> skipped_r;  // r where a K denominator vanishes
  bool identities_ok = false;
  bool ratio_ok = false;        // A(N+1) N(N-1) = A(N) 2(N+1)(2N-1)
  bool closed_form_ok = false;  // wz_A_direct(N) = wz_A_closed(N)
  bool pass() const { return identities_ok && ratio_ok && closed_form_ok; }
};

// For r = 0..N+1 verifies the telescoping identity
//   2(N+1)(2N-1) beta_r(N) - N(N-1) beta_r(N+1)
//     = K(N,r+1) beta_{r+1}(N) - K(N,r) beta_r(N)
// wherever both K values exist, recording a skip where one does not, then
// checks the recurrence ratio and the closed form of the sum.  N >= 2.
CertificateReport certificate_check(long N);

// For the order-(2m+2) self-bracket of E2, verifies that 144 times the
// second depth component equals the explicit double-sum expansion
//   24(2m+2) D^{2m+1} E2
//   + 4 [ sum_{r=2}^{2m+2} (-1)^r C(2m+2,r)^2 C(r,2) C(r+1,2)
//           D^{r-2}E2 D^{2m+2-r}E2
//       + sum_{r=1}^{2m+1} (-1)^r C(2m+2,r)^2 C(r+1,2) C(2m+3-r,2)
//           D^{r-1}E2 D^{2m+1-r}E2 ],
// and for m >= 1 that the component lies in the cusp space of weight 4m+4.
bool q2_bracket_check(int m);

}  // namespace qmrc
