#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppoly/space.hpp"

using namespace ppoly;

namespace {

QVectorPoly random_tuple(i64 N, int w, unsigned seed) {
  std::mt19937 rng(seed);
  QQ dom;
  QVectorPoly p(dom, N, w);
  for (auto& c : p.coords) c = Rat(static_cast<long>(rng() % 9) - 4);
  return p;
}

}  // namespace

TEST_CASE("slash: basic images") {
  QQ dom;
  int w = 4;
  // (1 - X^w) | S = X^w - 1
  std::vector<Rat> p(w + 1, Rat(0));
  p[0] = 1;
  p[w] = -1;
  auto q = slash(dom, p, MAT_S, w);
  CHECK(q[0] == Rat(-1));
  CHECK(q[w] == Rat(1));
  for (int j = 1; j < w; j++) CHECK(q[j] == 0);

  // X^j | diag(d,1) = d^j X^j
  std::vector<Rat> m(w + 1, Rat(0));
  m[3] = 1;
  auto md = slash(dom, m, Mat22{5, 0, 0, 1}, w);
  CHECK(md[3] == Rat(125));

  // X^2 |_{-2} (1 1; 0 1) = (X+1)^2
  std::vector<Rat> x2 = {Rat(0), Rat(0), Rat(1)};
  auto shifted = slash(dom, x2, MAT_T, 2);
  CHECK(shifted == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
}

TEST_CASE("slash is a right action for nonzero determinants") {
  QQ dom;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; trial++) {
    int w = 2 * (1 + static_cast<int>(rng() % 3));
    Mat22 g1{static_cast<i64>(rng() % 5) - 2, static_cast<i64>(rng() % 5) - 2, static_cast<i64>(rng() % 5) - 2,
             static_cast<i64>(rng() % 5) - 2};
    Mat22 g2{static_cast<i64>(rng() % 5) - 2, static_cast<i64>(rng() % 5) - 2, static_cast<i64>(rng() % 5) - 2,
             static_cast<i64>(rng() % 5) - 2};
    if (g1.det() == 0 || g2.det() == 0) continue;
    std::vector<Rat> p(w + 1);
    for (auto& c : p) c = Rat(static_cast<long>(rng() % 7) - 3);
    CHECK(slash(dom, slash(dom, p, g1, w), g2, w) == slash(dom, p, g1.mul(g2), w));
  }
}

TEST_CASE("group action: constant tuples and the 1|(1-S) image") {
  QQ dom;
  i64 N = 7;
  int w = 4;
  QVectorPoly one(dom, N, w);
  for (int A = 0; A < one.ncosets(); A++) one.at(A, 0) = 1;
  // matrices with bottom row (0, +-1) permute values without twisting
  QVectorPoly moved = group_act(one, MAT_T);
  CHECK(moved == one);
  // 1|(1-S): every component becomes 1 - X^w
  QVectorPoly p0 = one - group_act(one, MAT_S);
  for (int A = 0; A < p0.ncosets(); A++) {
    CHECK(p0.at(A, 0) == 1);
    CHECK(p0.at(A, w) == -1);
    for (int j = 1; j < w; j++) CHECK(p0.at(A, j) == 0);
  }
}

TEST_CASE("delta_act is an involution") {
  for (auto [N, w] : std::vector<std::pair<i64, int>>{{14, 4}, {7, 2}}) {
    QVectorPoly p = random_tuple(N, w, 17 + static_cast<unsigned>(N));
    CHECK(delta_act(delta_act(p)) == p);
  }
}

TEST_CASE("delta commutes with trace and include") {
  i64 N = 14, M = 7;
  int w = 4;
  QVectorPoly p = random_tuple(N, w, 23);
  CHECK(trace_to(delta_act(p), M) == delta_act(trace_to(p, M)));
  QVectorPoly q = random_tuple(M, w, 29);
  CHECK(include_to(delta_act(q), N) == delta_act(include_to(q, N)));
}

TEST_CASE("trace o include = (p+1) * id") {
  i64 M = 7, N = 14;
  int w = 4;
  QVectorPoly q = random_tuple(M, w, 31);
  QVectorPoly t = trace_to(include_to(q, N), M);
  CHECK(t == q.scaled(Rat(3)));  // index [Gamma_0(7):Gamma_0(14)] = 2+1
}

TEST_CASE("include evaluates through the projection") {
  i64 M = 7, N = 14;
  int w = 2;
  QVectorPoly q = random_tuple(M, w, 37);
  QVectorPoly inc = include_to(q, N);
  for (int A = 0; A < inc.ncosets(); A++) {
    int C = project_label(N, A, M);
    for (int j = 0; j <= w; j++) CHECK(inc.at(A, j) == q.at(C, j));
  }
}

TEST_CASE("dimensions of W_w(N) over Q") {
  // dim W = dim M_{w+2} + dim S_{w+2} for square-free N
  CHECK(build_w_q(1, 10).dim() == 3);
  CHECK(build_w_q(7, 4).dim() == 8);
  CHECK(build_w_q(7, 2).dim() == 4);
  CHECK(build_w_q(1, 2).dim() == 1);
  CHECK(build_w_q(14, 4).dim() == 20);
}

TEST_CASE("relations annihilate every basis vector") {
  for (auto [N, w] : std::vector<std::pair<i64, int>>{{1, 10}, {7, 4}, {14, 2}}) {
    QSubspace ws = build_w_q(N, w);
    QQ dom;
    QMat rel = relation_matrix(dom, N, w);
    CHECK((rel * ws.basis).is_zero());
  }
}

TEST_CASE("dimension match over Q and F_ell for good ell") {
  CHECK(build_w_f(7, 4, 53).dim() == 8);
  CHECK(build_w_f(7, 4, 11).dim() == 8);
  CHECK(build_w_f(1, 10, 23).dim() == 3);
  CHECK(build_w_f(7, 2, 5).dim() == 4);  // ell = w+3 still matches for the full space
}

TEST_CASE("characteristic 2 and 3 rejected") {
  CHECK_THROWS(build_w_f(7, 4, 3));
  CHECK_THROWS(build_w_f(7, 4, 2));
}

TEST_CASE("split_pm dimensions") {
  QQ dom;
  auto [p1, m1] = split_pm(dom, 1, 10, build_w_q(1, 10));
  CHECK(p1.dim() == 2);
  CHECK(m1.dim() == 1);
  auto [p7, m7] = split_pm(dom, 7, 4, build_w_q(7, 4));
  CHECK(p7.dim() == 5);
  CHECK(m7.dim() == 3);
}

TEST_CASE("split projectors are idempotent mod ell") {
  i64 N = 7;
  int w = 4;
  for (i64 ell : {5, 53}) {
    Fp f(ell);
    FMat d = delta_act_matrix(f, N, w);
    FMat id = FMat::identity(f, d.rows);
    i64 half = invmod(2, ell);
    FMat proj = (id + d).scaled(half);
    CHECK(proj * proj == proj);
    FMat projm = (id - d).scaled(half);
    CHECK(projm * projm == projm);
  }
}

TEST_CASE("W over Z is saturated and reduces with full rank") {
  ZSubspace wz = build_w_z(7, 4);
  CHECK(wz.dim() == 8);
  auto diag = snf_diagonal(wz.basis);
  for (const auto& d : diag) CHECK(d == 1);
  CHECK(reduce_mod(wz, 53).dim() == 8);
}

TEST_CASE("unipotent action facts on V_w(F_ell)") {
  CHECK(lemma_unipotent_check(4, 7, 1));
  CHECK(lemma_unipotent_check(2, 5, 1));
  CHECK(lemma_unipotent_check(10, 13, 1));
  CHECK(lemma_unipotent_check(4, 7, 3));
  CHECK_THROWS(lemma_unipotent_check(4, 7, 7));   // ell | a rejected
  CHECK_THROWS(lemma_unipotent_check(10, 7, 1));  // needs ell > w
}
