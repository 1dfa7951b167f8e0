#pragma once

#include "qmrc/rational.hpp"

namespace qmrc {

// B_h with B_1 = -1/2, i.e. the solution of sum_{j=0}^{m} C(m+1,j) B_j = 0,
// B_0 = 1.  Memoized; safe to call from several threads.
Rational bernoulli(unsigned h);

// C(a,b).  Returns 0 when b < 0 or b > a; negative a is rejected.
Integer binomial(long a, long b);

Integer factorial(unsigned long n);

// Sum of the h-th powers of the positive divisors of n.  Requires h >= 1 and
// n >= 1.  Computed from the prime factorization, so products of large
// coprime arguments stay cheap.
Integer sigma(unsigned h, unsigned long n);

}  // namespace qmrc
