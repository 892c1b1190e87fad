#include "ppoly/arith.hpp"

#include <mutex>
#include <vector>

namespace ppoly {

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

const Rat& bernoulli(unsigned k) {
  static std::vector<Rat> cache = {Rat(1), make_rat(-1, 2)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) {
    unsigned m = cache.size();
    if (m % 2 == 1) {
      cache.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} binom(m+1, j) B_j
    Rat sum = 0;
    mpz_class binom;
    for (unsigned j = 0; j < m; j++) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      sum += Rat(binom) * cache[j];
    }
    cache.push_back(-sum / (m + 1));
  }
  return cache[k];
}

bool numerator_divides(const mpz_class& ell, const Rat& q) {
  return mpz_divisible_p(q.get_num().get_mpz_t(), ell.get_mpz_t());
}

T1Conditions t1_conditions(unsigned k, i64 p, int eps, i64 ell) {
  if (!is_prime(p) || !is_prime(ell)) throw std::domain_error("t1_conditions: p and ell must be prime");
  if (k % 2 != 0 || k < 4) throw std::domain_error("t1_conditions: k must be even, k >= 4");
  if (eps != 1 && eps != -1) throw std::domain_error("t1_conditions: eps must be +-1");

  T1Conditions res;
  if (ell <= static_cast<i64>(k) - 2 || ell <= 3) {
    res.failure = "ell must exceed max(3, k-2)";
    return res;
  }

  mpz_class pk2 = pow_mpz(p, k / 2) + eps;        // p^{k/2} + eps
  mpz_class pk2m1 = pow_mpz(p, k / 2 - 1) + eps;  // p^{k/2-1} + eps
  mpz_class L(ell);

  mpz_class t = pk2;
  while (t != 0 && mpz_divisible_p(t.get_mpz_t(), L.get_mpz_t())) {
    res.ell_power++;
    t /= L;
  }
  res.case_even_route = res.ell_power > 0;

  if (ell == static_cast<i64>(k) + 1 && res.ell_power < 2) {
    res.failure = "ell = k+1 requires ell^2 | p^{k/2}+eps";
    return res;
  }
  if (!mpz_divisible_p(mpz_class(pk2 * pk2m1).get_mpz_t(), L.get_mpz_t())) {
    res.failure = "ell does not divide (p^{k/2}+eps)(p^{k/2-1}+eps)";
    return res;
  }
  Rat bk_over_k = bernoulli(k) / static_cast<long>(k);
  if (!numerator_divides(L, bk_over_k * Rat(pk2))) {
    res.failure = "ell does not divide num(B_k/k * (p^{k/2}+eps))";
    return res;
  }

  if (!res.case_even_route) {
    for (unsigned n = 2; n < k; n += 2) {
      Rat prod = bernoulli(n) * bernoulli(k - n) * Rat(pow_mpz(p, n - 1) - 1);
      if (!numerator_divides(L, prod)) {
        res.odd_route_witness_n = n;
        break;
      }
    }
    if (!res.odd_route_witness_n) {
      res.failure = "no even n in (0,k) with ell coprime to B_n B_{k-n} (p^{n-1}-1)";
      return res;
    }
  }

  res.ok = true;
  return res;
}

}  // namespace ppoly
