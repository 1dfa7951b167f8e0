#include "qmrc/numkernel.hpp"

#include <mutex>
#include <vector>

namespace qmrc {

Integer binomial(long a, long b) {
  if (a < 0) throw std::domain_error("binomial: negative upper argument");
  if (b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational bernoulli(unsigned h) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::scoped_lock lock(mu);
  while (cache.size() <= h) {
    // C(m+1,m) B_m = -sum_{j<m} C(m+1,j) B_j
    const unsigned long m = cache.size();
    Rational acc;
    for (unsigned long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(Integer(m + 1)));
  }
  return cache[h];
}

Integer sigma(unsigned h, unsigned long n) {
  if (h < 1) throw std::domain_error("sigma: power must be positive");
  if (n < 1) throw std::domain_error("sigma: argument must be positive");
  Integer result = 1;
  unsigned long m = n;
  auto absorb = [&](unsigned long p) {
    // 1 + p^h + ... + p^{h e} for the full power p^e dividing m
    Integer ph, powed = 1, term = 1;
    mpz_ui_pow_ui(ph.get_mpz_t(), p, h);
    while (m % p == 0) {
      m /= p;
      powed *= ph;
      term += powed;
    }
    result *= term;
  };
  if (m % 2 == 0) absorb(2);
  for (unsigned long p = 3; p <= m / p; p += 2)
    if (m % p == 0) absorb(p);
  if (m > 1) absorb(m);
  return result;
}

}  // namespace qmrc
