#ifndef PPOLY_DOMAIN_HPP
#define PPOLY_DOMAIN_HPP

#include <string>

#include "ppoly/arith.hpp"

namespace ppoly {

// Coefficient domains. Generic code takes the domain as a value (Fp carries
// its modulus) and goes through these methods for all arithmetic, so the
// same space/operator code runs over Q, Z and F_ell.

struct QQ {
  using Elem = Rat;
  static constexpr bool is_field = true;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(i64 v) const { return Rat(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return Rat(v); }
  Elem from_mpq(const Rat& v) const { return v; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Rat(1) / a; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  std::string to_string(const Elem& a) const { return rat_to_string(a); }
  std::string name() const { return "Q"; }
  long characteristic() const { return 0; }
};

struct ZZ {
  using Elem = mpz_class;
  static constexpr bool is_field = false;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(i64 v) const { return mpz_class(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return v; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Z"; }
  long characteristic() const { return 0; }
};

struct Fp {
  i64 p = 0;
  using Elem = i64;
  static constexpr bool is_field = true;

  explicit Fp(i64 p_) : p(p_) {
    if (!is_prime(p_)) throw std::domain_error("Fp: modulus must be prime");
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(i64 v) const { return mod_pos(v, p); }
  Elem from_mpz(const mpz_class& v) const {
    mpz_class r = v % p;
    i64 x = r.get_si();
    return x < 0 ? x + p : x;
  }
  // Reduces num/den; the denominator must be a unit mod p.
  Elem from_mpq(const Rat& v) const {
    Elem den = from_mpz(v.get_den());
    if (den == 0) throw std::domain_error("Fp: denominator divisible by modulus");
    return mulmod(from_mpz(v.get_num()), invmod(den, p), p);
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
  Elem sub(const Elem& a, const Elem& b) const { return mod_pos(a - b, p); }
  Elem mul(const Elem& a, const Elem& b) const { return mulmod(a, b, p); }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  Elem inv(const Elem& a) const { return invmod(a, p); }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  std::string to_string(const Elem& a) const { return std::to_string(a) + " mod " + std::to_string(p); }
  std::string name() const { return "F" + std::to_string(p); }
  long characteristic() const { return p; }
};

template <class D>
typename D::Elem dom_pow(const D& dom, typename D::Elem b, unsigned e) {
  auto r = dom.one();
  while (e) {
    if (e & 1) r = dom.mul(r, b);
    b = dom.mul(b, b);
    e >>= 1;
  }
  return r;
}

}  // namespace ppoly

#endif
