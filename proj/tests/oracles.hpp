#ifndef PPOLY_TEST_ORACLES_HPP
#define PPOLY_TEST_ORACLES_HPP

// Independent reference computations used only by the test suites; these
// deliberately avoid the code paths they are checking.

#include <vector>

#include "ppoly/arith.hpp"

namespace oracles {

using ppoly::Rat;
using ppoly::i64;

// Bernoulli numbers by the Akiyama-Tanigawa triangle.
inline Rat bernoulli_at(unsigned n) {
  std::vector<Rat> a(n + 1);
  for (unsigned m = 0; m <= n; m++) {
    a[m] = Rat(1, m + 1);
    for (unsigned j = m; j >= 1; j--) a[j - 1] = Rat(static_cast<long>(j)) * (a[j - 1] - a[j]);
  }
  Rat b = a[0];  // Akiyama-Tanigawa yields B_n with B_1 = +1/2
  if (n == 1) b = -b;
  return b;
}

// Denominator of B_k by von Staudt-Clausen: product of primes q with q-1 | k.
inline mpz_class bernoulli_denominator_vsc(unsigned k) {
  mpz_class d = 1;
  for (i64 q = 2; q <= static_cast<i64>(k) + 1; q++) {
    if (!ppoly::is_prime(q)) continue;
    if (k % (q - 1) == 0) d *= q;
  }
  return d;
}

// q-expansion of Delta = q prod (1-q^m)^24 up to q^terms; index i holds tau(i).
inline std::vector<long> tau_coefficients(int terms) {
  std::vector<long> f(terms + 1, 0);
  f[1] = 1;
  for (int m = 1; m <= terms; m++) {
    for (int rep = 0; rep < 24; rep++) {
      // multiply by (1 - q^m)
      for (int i = terms; i >= m; i--) f[i] -= f[i - m];
    }
  }
  return f;
}

inline mpz_class sigma_brute(i64 n, unsigned a) {
  mpz_class s = 0;
  for (i64 d = 1; d <= n; d++)
    if (n % d == 0) s += ppoly::pow_mpz(mpz_class(d), a);
  return s;
}

}  // namespace oracles

#endif
