#include "ppoly/eisenstein.hpp"

#include <sstream>

namespace ppoly {

EpsSystem EpsSystem::for_level(i64 N, const std::map<i64, int>& signs) {
  if (!is_squarefree(N)) throw std::domain_error("EpsSystem: level must be square-free");
  EpsSystem e;
  for (i64 p : prime_factors(N)) {
    auto it = signs.find(p);
    if (it == signs.end()) throw std::domain_error("EpsSystem: missing sign at prime " + std::to_string(p));
    if (it->second != 1 && it->second != -1) throw std::domain_error("EpsSystem: signs must be +-1");
    e.sign_at_prime[p] = it->second;
  }
  return e;
}

int EpsSystem::operator()(i64 d) const {
  if (d <= 0) throw std::domain_error("EpsSystem: divisor must be positive");
  int s = 1;
  for (i64 p : prime_factors(d)) {
    auto it = sign_at_prime.find(p);
    if (it == sign_at_prime.end()) throw std::domain_error("EpsSystem: no sign at prime " + std::to_string(p));
    s *= it->second;
  }
  return s;
}

EpsSystem EpsSystem::restricted(i64 M) const {
  EpsSystem e;
  for (i64 p : prime_factors(M)) e.sign_at_prime[p] = (*this)(p);
  return e;
}

std::string EpsSystem::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, s] : sign_at_prime) {
    if (!first) os << ",";
    os << p << "=" << (s > 0 ? "+1" : "-1");
    first = false;
  }
  return first ? "1" : os.str();
}

ExtPoly eis_minus_level1(unsigned k) {
  if (k < 4 || k % 2) throw std::domain_error("eis_minus_level1: k must be even, k >= 4");
  const int w = static_cast<int>(k) - 2;
  ExtPoly p(w);
  Rat principal = -(bernoulli(k) / static_cast<long>(2 * k)) / static_cast<long>(k - 1);
  p.deg(-1) = principal;
  p.deg(w + 1) = principal;
  mpz_class binom;
  for (unsigned n = 2; n < k; n += 2) {
    mpz_bin_uiui(binom.get_mpz_t(), k - 2, n - 1);
    Rat c = Rat(binom) * (bernoulli(n) / static_cast<long>(n)) * (bernoulli(k - n) / static_cast<long>(k - n)) / 2;
    p.deg(static_cast<int>(n) - 1) = c;
  }
  return p;
}

ExtPoly eis_minus_identity_coset(i64 N, const EpsSystem& eps, unsigned k) {
  if (!is_squarefree(N)) throw std::domain_error("eis_minus_identity_coset: N must be square-free");
  ExtPoly base = eis_minus_level1(k);
  ExtPoly out(base.w);
  for (i64 d : divisors(N)) {
    Rat scale = Rat(eps(d)) / Rat(pow_mpz(mpz_class(d), (k - 2) / 2));
    out = out + base.slash_diag(d).scaled(scale);
  }
  return out;
}

bool trace_identity_check(i64 M, i64 p, const EpsSystem& eps, unsigned k) {
  i64 N = M * p;
  if (!is_squarefree(N)) throw std::domain_error("trace_identity_check: Mp must be square-free");
  const int w = static_cast<int>(k) - 2;
  QQ dom;
  auto big = eis_plus(dom, N, eps, w);
  auto traced = trace_to(big, M);
  Rat factor = Rat(1) + Rat(eps(p)) * Rat(pow_mpz(mpz_class(p), k / 2));
  auto small = eis_plus(dom, M, eps.restricted(M), w).scaled(factor);
  return traced == small;
}

}  // namespace ppoly
