#include "ppoly/int_util.hpp"

#include <algorithm>
#include <cmath>

namespace ppoly {

i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Xgcd xgcd_i64(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

i64 powmod(i64 b, i64 e, i64 m) {
  b = mod_pos(b, m);
  i64 r = 1 % m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 m) {
  auto [g, x, y] = xgcd_i64(mod_pos(a, m), m);
  if (g != 1) throw std::domain_error("invmod: not invertible");
  return mod_pos(x, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    s++;
  }
  // Sinclair's deterministic witness set for 64-bit integers.
  for (i64 a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    i64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; i++) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(12345);
  while (true) {
    mpz_class x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1;
    mpz_class d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n <= 1) return {};
  std::vector<mpz_class> primes;
  for (i64 p = 2; p < 100000 && mpz_class(p) * p <= n; p == 2 ? p++ : p += 2) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      out.back().second++;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (auto& [p, e] : factor(mpz_class(n))) {
    if (!p.fits_slong_p()) throw std::overflow_error("prime_factors: factor too large");
    out.push_back(p.get_si());
  }
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> divs = {1};
  for (auto& [pz, e] : factor(mpz_class(n))) {
    i64 p = pz.get_si();
    size_t sz = divs.size();
    i64 pe = 1;
    for (int i = 0; i < e; i++) {
      pe *= p;
      for (size_t j = 0; j < sz; j++) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_squarefree(i64 n) {
  if (n <= 0) return false;
  for (auto& [p, e] : factor(mpz_class(n)))
    if (e > 1) return false;
  return true;
}

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

i64 pow_i64(i64 b, unsigned e) {
  mpz_class r = pow_mpz(mpz_class(b), e);
  if (!r.fits_slong_p()) throw std::overflow_error("pow_i64 overflow");
  return r.get_si();
}

mpz_class sigma(i64 n, unsigned a) {
  if (n < 1) throw std::domain_error("sigma: n must be positive");
  mpz_class total = 0;
  for (i64 d : divisors(n)) total += pow_mpz(mpz_class(d), a);
  return total;
}

i64 psi_index(i64 N) {
  i64 r = N;
  for (i64 p : prime_factors(N)) r = r / p * (p + 1);
  return r;
}

}  // namespace ppoly
