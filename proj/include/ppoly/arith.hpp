#ifndef PPOLY_ARITH_HPP
#define PPOLY_ARITH_HPP

#include <map>
#include <optional>
#include <string>

#include "ppoly/int_util.hpp"

namespace ppoly {

using Rat = mpq_class;

inline Rat make_rat(const mpz_class& num, const mpz_class& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Bernoulli number B_k with B_1 = -1/2; cached.
const Rat& bernoulli(unsigned k);

// True iff ell divides the numerator of q written in lowest terms.
bool numerator_divides(const mpz_class& ell, const Rat& q);

// Divisibility conditions selecting the congruence primes for the
// level-p Eisenstein series E_{k,p}^{(eps)}.  The main divisibility is
//   ell | (p^{k/2}+eps)(p^{k/2-1}+eps)  and  ell | num(B_k/k * (p^{k/2}+eps)),
// with ell > k-2, ell > 3.  The boundary case ell = k+1 is admitted when
// ell^2 | p^{k/2}+eps.  When ell does not divide p^{k/2}+eps, an even
// 0 < n < k with ell not dividing B_n B_{k-n} (p^{n-1}-1) is required.
struct T1Conditions {
  bool ok = false;
  bool case_even_route = false;  // ell | p^{k/2}+eps
  int ell_power = 0;             // largest j with ell^j | p^{k/2}+eps
  std::optional<unsigned> odd_route_witness_n;
  std::string failure;
};

T1Conditions t1_conditions(unsigned k, i64 p, int eps, i64 ell);

}  // namespace ppoly

#endif
