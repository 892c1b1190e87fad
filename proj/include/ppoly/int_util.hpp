#ifndef PPOLY_INT_UTIL_HPP
#define PPOLY_INT_UTIL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace ppoly {

using i64 = long;  // 64-bit on this platform; converts cleanly to mpz_class

i64 gcd_i64(i64 a, i64 b);

// g = gcd(a,b) together with x,y such that a*x + b*y = g.
struct Xgcd {
  i64 g, x, y;
};
Xgcd xgcd_i64(i64 a, i64 b);

// Nonnegative remainder in [0, m), m > 0.
i64 mod_pos(i64 a, i64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(i64 n);

// Trial division followed by Pollard rho; fine for desk-scale inputs.
std::vector<std::pair<mpz_class, int>> factor(const mpz_class& n);
std::vector<i64> prime_factors(i64 n);

std::vector<i64> divisors(i64 n);
bool is_squarefree(i64 n);

mpz_class pow_mpz(const mpz_class& b, unsigned long e);
i64 pow_i64(i64 b, unsigned e);  // throws on overflow

i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 b, i64 e, i64 m);
i64 invmod(i64 a, i64 m);  // m prime assumed where used

// sigma_a(n) = sum of d^a over divisors d of n.
mpz_class sigma(i64 n, unsigned a);

// Index of Gamma_0(N) in SL_2(Z): N * prod_{p|N} (1 + 1/p).
i64 psi_index(i64 N);

}  // namespace ppoly

#endif
