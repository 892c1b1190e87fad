#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppoly/coset.hpp"

using namespace ppoly;

TEST_CASE("projective line sizes") {
  CHECK(coset_table(1).size() == 1);
  CHECK(coset_table(7).size() == 8);
  CHECK(coset_table(14).size() == 24);
  CHECK(coset_table(19).size() == 20);
  for (i64 N : {2, 3, 4, 5, 6, 9, 10, 12, 15, 21, 30})
    CHECK(coset_table(N).size() == psi_index(N));
}

TEST_CASE("canonical labels are sorted and unique") {
  const CosetTable& t = coset_table(7);
  std::vector<std::pair<i64, i64>> expect = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}};
  CHECK(t.labels() == expect);
  CHECK(t.identity_index() == 0);
}

TEST_CASE("action basics") {
  const CosetTable& t = coset_table(7);
  int id = t.identity_index();
  CHECK(t.act(id, MAT_ID) == id);
  CHECK(t.act(id, MAT_S) == t.index_of(1, 0));
  // (1:2) * T = (1:3)
  CHECK(t.act(t.index_of(1, 2), MAT_T) == t.index_of(1, 3));
}

TEST_CASE("act is a right action") {
  std::mt19937 rng(5);
  auto random_sl2 = [&]() {
    Mat22 g = MAT_ID;
    for (int i = 0; i < 6; i++) {
      long c = static_cast<long>(rng() % 7) - 3;
      g = (rng() % 2) ? g.mul({1, c, 0, 1}) : g.mul({1, 0, c, 1});
    }
    return g;
  };
  for (i64 N : {5, 7, 14, 30}) {
    const CosetTable& t = coset_table(N);
    for (int trial = 0; trial < 20; trial++) {
      Mat22 g1 = random_sl2(), g2 = random_sl2();
      int a = static_cast<int>(rng() % t.size());
      CHECK(t.act(t.act(a, g1), g2) == t.act(a, g1.mul(g2)));
    }
  }
}

TEST_CASE("S^2 and U^3 act trivially on labels") {
  for (i64 N : {7, 14, 19}) {
    const CosetTable& t = coset_table(N);
    Mat22 s2 = MAT_S.mul(MAT_S);  // -1, which must act trivially
    Mat22 u3 = MAT_U.mul(MAT_U).mul(MAT_U);
    for (int a = 0; a < t.size(); a++) {
      CHECK(t.act(a, s2) == a);
      CHECK(t.act(a, u3) == a);
    }
  }
}

TEST_CASE("delta conjugation") {
  const CosetTable& t7 = coset_table(7);
  CHECK(t7.delta_conj(t7.index_of(0, 1)) == t7.index_of(0, 1));
  CHECK(t7.delta_conj(t7.index_of(1, 1)) == t7.index_of(-1, 1));
  CHECK(t7.index_of(-1, 1) == t7.index_of(1, 6));
  const CosetTable& t14 = coset_table(14);
  for (int a = 0; a < t14.size(); a++) CHECK(t14.delta_conj(t14.delta_conj(a)) == a);
}

TEST_CASE("lift produces unimodular representatives with the right label") {
  for (i64 N : {1, 5, 7, 14, 19, 30}) {
    const CosetTable& t = coset_table(N);
    for (int a = 0; a < t.size(); a++) {
      Mat22 m = t.lift(a);
      CHECK(m.det() == 1);
      if (N > 1) CHECK(t.index_of(m.c, m.d) == a);
    }
  }
}

TEST_CASE("project and fiber") {
  const CosetTable& t14 = coset_table(14);
  // (7:1) at level 14 projects to (0:1) at level 7
  CHECK(project_label(14, t14.index_of(7, 1), 7) == coset_table(7).index_of(0, 1));
  auto fib = fiber_of_label(7, coset_table(7).index_of(0, 1), 14);
  CHECK(fib.size() == 3);  // index [Gamma_0(7) : Gamma_0(14)] = 3
  // fibers partition the level-14 line
  int total = 0;
  for (int c = 0; c < coset_table(7).size(); c++) {
    auto f = fiber_of_label(7, c, 14);
    total += static_cast<int>(f.size());
    for (int x : f) CHECK(project_label(14, x, 7) == c);
  }
  CHECK(total == 24);
}

TEST_CASE("atkin-lehner matrices") {
  for (auto [Q, N] : std::vector<std::pair<i64, i64>>{{7, 7}, {2, 14}, {7, 14}, {14, 14}, {19, 19}, {3, 21}}) {
    Mat22 w = atkin_lehner_mat(Q, N);
    CHECK(w.det() == Q);
    CHECK(w.a % Q == 0);
    CHECK(w.d % Q == 0);
    CHECK(w.c % N == 0);
  }
  CHECK_THROWS(atkin_lehner_mat(2, 12));  // 2 does not exactly divide 12
}

TEST_CASE("label serialization") {
  CHECK(label_str(7, coset_table(7).index_of(1, 2)) == "1:2@7");
  CHECK(label_str(1, 0) == "0:1@1");
}
