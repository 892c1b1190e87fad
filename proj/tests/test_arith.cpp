#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ppoly/arith.hpp"

using namespace ppoly;

TEST_CASE("bernoulli basics") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == make_rat(-1, 2));
  CHECK(bernoulli(6) == make_rat(1, 42));
  CHECK(bernoulli(12) == make_rat(-691, 2730));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(13) == 0);
}

TEST_CASE("bernoulli against the Akiyama-Tanigawa oracle") {
  for (unsigned k = 2; k <= 60; k += 2) CHECK(bernoulli(k) == oracles::bernoulli_at(k));
}

TEST_CASE("bernoulli denominators match von Staudt-Clausen") {
  for (unsigned k = 2; k <= 40; k += 2) CHECK(bernoulli(k).get_den() == oracles::bernoulli_denominator_vsc(k));
}

TEST_CASE("numerator of B_12/24 is divisible by 691") {
  Rat q = bernoulli(12) / 24;
  CHECK(numerator_divides(691, q));
  CHECK(q == make_rat(-691, 65520));
}

TEST_CASE("sigma") {
  CHECK(sigma(1, 5) == 1);
  CHECK(sigma(2, 5) == 33);
  CHECK(sigma(2, 11) == 2049);
  CHECK(sigma(6, 1) == 12);
  for (i64 n = 1; n <= 40; n++)
    for (unsigned a = 0; a <= 4; a++) CHECK(sigma(n, a) == oracles::sigma_brute(n, a));
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
  for (i64 m = 1; m <= 50; m++)
    for (i64 n = 1; n <= 50; n++) {
      if (gcd_i64(m, n) != 1) continue;
      CHECK(sigma(m * n, 3) == sigma(m, 3) * sigma(n, 3));
    }
}

TEST_CASE("numerator_divides") {
  CHECK(numerator_divides(691, make_rat(-691, 65520)));
  CHECK_FALSE(numerator_divides(7, make_rat(1, 252)));
  CHECK(numerator_divides(5, Rat(0)));
  // invariance under ell-free scaling
  Rat q = make_rat(-691, 65520);
  for (long a : {2, 3, 10, 99}) {
    CHECK(numerator_divides(691, q * Rat(a)));
    CHECK(numerator_divides(691, q / Rat(a)));
  }
}

TEST_CASE("t1_conditions on the worked instances") {
  auto c1 = t1_conditions(6, 19, +1, 7);  // ell = k+1 boundary case
  CHECK(c1.ok);
  CHECK(c1.case_even_route);
  CHECK(c1.ell_power == 3);  // 7^3 | 19^3 + 1 = 6860

  auto c2 = t1_conditions(6, 7, +1, 43);
  CHECK(c2.ok);
  CHECK(c2.case_even_route);

  auto c3 = t1_conditions(40, 5, -1, 71);
  CHECK(c3.ok);
  CHECK(c3.case_even_route);
}

TEST_CASE("t1_conditions rejections") {
  CHECK_THROWS(t1_conditions(6, 15, +1, 7));   // p not prime
  CHECK_THROWS(t1_conditions(6, 19, +1, 9));   // ell not prime
  CHECK_FALSE(t1_conditions(12, 5, +1, 7).ok); // ell <= k-2
}

TEST_CASE("primality and factoring") {
  CHECK(is_prime(2));
  CHECK(is_prime(691));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(6860));
  auto f = factor(mpz_class(6860));
  mpz_class back = 1;
  for (auto& [p, e] : f)
    for (int i = 0; i < e; i++) back *= p;
  CHECK(back == 6860);
  CHECK(divisors(14) == std::vector<i64>{1, 2, 7, 14});
  CHECK(psi_index(14) == 24);
  CHECK(psi_index(7) == 8);
  CHECK(is_squarefree(14));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("rational serialization") {
  CHECK(rat_to_string(make_rat(-43, 2)) == "-43/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_from_string("-43/2") == make_rat(-43, 2));
}
