#ifndef PPOLY_EISENSTEIN_HPP
#define PPOLY_EISENSTEIN_HPP

#include "ppoly/hecke.hpp"

namespace ppoly {

// System of Atkin-Lehner signs on the primes dividing a square-free level,
// extended multiplicatively to all divisors.
struct EpsSystem {
  std::map<i64, int> sign_at_prime;

  static EpsSystem trivial() { return {}; }
  static EpsSystem for_level(i64 N, const std::map<i64, int>& signs);
  int operator()(i64 d) const;  // d square-free product of known primes
  EpsSystem restricted(i64 M) const;
  std::string str() const;
};

// The class 1|(1-S): the tuple with value 1 - X^w at every coset.
template <class D>
VectorPoly<D> p_zero(const D& dom, i64 N, int w) {
  if (w < 2 || w % 2) throw std::domain_error("p_zero: w must be even, w >= 2");
  VectorPoly<D> p(dom, N, w);
  for (int A = 0; A < p.ncosets(); A++) {
    p.at(A, 0) = dom.one();
    p.at(A, w) = dom.neg(dom.one());
  }
  return p;
}

// Closed form of the full Atkin-Lehner image of p_zero at a single coset
// (z:t):  N_z^w - N_t^w X^w with N_a = N / gcd(N, a).
template <class D>
std::vector<typename D::Elem> pal_image(const D& dom, i64 N, int w, int label_idx) {
  auto [z, t] = coset_table(N).labels()[label_idx];
  i64 nz = N / gcd_i64(N, z);
  i64 nt = N / gcd_i64(N, t);
  std::vector<typename D::Elem> p(w + 1, dom.zero());
  p[0] = dom_pow(dom, dom.from_int(nz), w);
  p[w] = dom.sub(p[w], dom_pow(dom, dom.from_int(nt), w));
  return p;
}

// The even Eisenstein class: value eps(N_z) N_z^{w/2} - eps(N_t) N_t^{w/2} X^w
// at the coset (z:t); an integer tuple.
template <class D>
VectorPoly<D> eis_plus(const D& dom, i64 N, const EpsSystem& eps, int w) {
  if (!is_squarefree(N)) throw std::domain_error("eis_plus: N must be square-free");
  if (w < 2 || w % 2) throw std::domain_error("eis_plus: w must be even, w >= 2");
  const CosetTable& tbl = coset_table(N);
  VectorPoly<D> p(dom, N, w);
  for (int A = 0; A < tbl.size(); A++) {
    auto [z, t] = tbl.labels()[A];
    i64 nz = N / gcd_i64(N, z);
    i64 nt = N / gcd_i64(N, t);
    auto vz = dom.mul(dom.from_int(eps(nz)), dom_pow(dom, dom.from_int(nz), w / 2));
    auto vt = dom.mul(dom.from_int(eps(nt)), dom_pow(dom, dom.from_int(nt), w / 2));
    p.at(A, 0) = vz;
    p.at(A, w) = dom.neg(vt);
  }
  return p;
}

// Odd extended class of the level-one Eisenstein series of weight k:
// principal coefficients -(B_k/2k)/(k-1) at X^{k-1} and X^{-1}, interior
// coefficient (1/2) binom(k-2, n-1) (B_n/n)(B_{k-n}/(k-n)) at X^{n-1} for
// even 0 < n < k.
ExtPoly eis_minus_level1(unsigned k);

// Identity-coset value of the odd Eisenstein class at square-free level N:
// sum over d | N of eps(d) d^{-w/2} (level-one class)|diag(d,1).
ExtPoly eis_minus_identity_coset(i64 N, const EpsSystem& eps, unsigned k);

// Exact trace identity for the even Eisenstein classes: with N = M p,
//   tr^N_M P^+ = (1 + eps(p) p^{k/2}) P^+ at level M.
bool trace_identity_check(i64 M, i64 p, const EpsSystem& eps, unsigned k);

}  // namespace ppoly

#endif
