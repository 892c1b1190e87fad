#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppoly/linalg.hpp"

using namespace ppoly;

namespace {

ZMat zmat(const std::vector<std::vector<long>>& rows) {
  ZMat m(ZZ{}, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) m.at(i, j) = rows[i][j];
  return m;
}

QMat qmat(const std::vector<std::vector<long>>& rows) {
  QMat m(QQ{}, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) m.at(i, j) = Rat(rows[i][j]);
  return m;
}

bool annihilates(const ZMat& m, const ZMat& ker) {
  ZMat prod = m * ker;
  return prod.is_zero();
}

}  // namespace

TEST_CASE("kernel of identity and of zero") {
  QMat id = QMat::identity(QQ{}, 3);
  CHECK(kernel(id).dim() == 0);
  Fp f5(5);
  FMat z(f5, 2, 3);
  CHECK(kernel(z).dim() == 3);
}

TEST_CASE("saturated integer kernel of [[2,4]]") {
  ZMat m = zmat({{2, 4}});
  ZSubspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  // brute force over small vectors: the primitive solutions are +-(2,-1)
  bool match = (k.basis.at(0, 0) == 2 && k.basis.at(1, 0) == -1) || (k.basis.at(0, 0) == -2 && k.basis.at(1, 0) == 1);
  CHECK(match);
  for (int x = -4; x <= 4; x++)
    for (int y = -4; y <= 4; y++) {
      if (2 * x + 4 * y != 0) continue;
      // every small solution is an integer multiple of the basis vector
      if (x == 0 && y == 0) continue;
      CHECK(x % 2 == 0);
    }
}

TEST_CASE("rank-nullity over fields") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; trial++) {
    int r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
    QMat m(QQ{}, r, c);
    for (int i = 0; i < r; i++)
      for (int j = 0; j < c; j++) m.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
    CHECK(rank(m) + kernel(m).dim() == c);
    Fp f7(7);
    FMat mf = qmat_mod(m, f7);
    CHECK(rank_field(mf) + kernel(mf).dim() == c);
  }
}

TEST_CASE("integer rank equals rational rank") {
  ZMat m = zmat({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {3, 7, 10}});
  CHECK(rank(m) == rank(zmat_to_qmat(m)));
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel vectors genuinely annihilate") {
  ZMat m = zmat({{3, 1, 4, 1}, {5, 9, 2, 6}, {8, 10, 6, 7}});
  ZSubspace k = kernel(m);
  CHECK(annihilates(m, k.basis));
  QSubspace kq = kernel(zmat_to_qmat(m));
  CHECK(k.dim() == kq.dim());
}

TEST_CASE("saturation: kernel is saturated (smith form all ones)") {
  ZMat m = zmat({{2, 4, 6}, {0, 2, 2}});
  ZSubspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  auto diag = snf_diagonal(k.basis);
  for (const auto& d : diag) CHECK(d == 1);
  mpz_class g = 0;
  for (int i = 0; i < k.basis.rows; i++) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.basis.at(i, 0).get_mpz_t());
  CHECK(g == 1);
}

TEST_CASE("saturate_lattice fixes index") {
  // columns span an index-5 sublattice of the saturation
  ZMat b = zmat({{5, 0}, {0, 5}, {0, 0}});
  b.at(0, 0) = 5;
  ZMat s = saturate_lattice(b);
  CHECK(s.cols == 2);
  auto diag = snf_diagonal(s);
  for (const auto& d : diag) CHECK(d == 1);
}

TEST_CASE("charpoly of diagonal and companion matrices") {
  QMat d = qmat({{2, 0}, {0, 3}});
  auto cp = charpoly_field(d);
  // (x-2)(x-3) = x^2 - 5x + 6
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == Rat(6));
  CHECK(cp[1] == Rat(-5));
  CHECK(cp[2] == Rat(1));

  QMat comp = qmat({{0, -1}, {1, -1}});  // companion of x^2 + x + 1
  auto cp2 = charpoly_field(comp);
  CHECK(cp2[0] == Rat(1));
  CHECK(cp2[1] == Rat(1));
  CHECK(cp2[2] == Rat(1));
}

TEST_CASE("charpoly invariant under conjugation") {
  std::mt19937 rng(11);
  for (int n : {2, 3, 5, 8}) {
    QMat m(QQ{}, n, n);
    for (auto& e : m.a) e = Rat(static_cast<long>(rng() % 11) - 5);
    // random unimodular-ish P: product of elementary operations
    QMat p = QMat::identity(QQ{}, n);
    for (int t = 0; t < 2 * n; t++) {
      int i = rng() % n, j = rng() % n;
      if (i == j) continue;
      long c = static_cast<long>(rng() % 5) - 2;
      for (int col = 0; col < n; col++) p.at(i, col) += Rat(c) * p.at(j, col);
    }
    // p is invertible (unit determinant by construction)
    QMat pm = p * m;
    auto x = solve_in_basis(p, pm);  // x = p^{-1} (p m) = m, sanity for the solver
    REQUIRE(x);
    CHECK(*x == m);
    // conjugate via solving p * y = m * p
    auto y = solve_in_basis(p, m * p);
    REQUIRE(y);
    CHECK(charpoly_field(*y) == charpoly_field(m));
  }
}

TEST_CASE("eigenspace and common eigenspace") {
  QMat id = QMat::identity(QQ{}, 4);
  CHECK(eigenspace(id, Rat(1)).dim() == 4);
  QMat d = qmat({{1, 0}, {0, 2}});
  CHECK(eigenspace(d, Rat(3)).dim() == 0);
  QMat d2 = qmat({{5, 0}, {0, 5}});
  auto ce = common_eigenspace<QQ>({{d, Rat(1)}, {d2, Rat(5)}});
  REQUIRE(ce.dim() == 1);
  CHECK(ce.basis.at(0, 0) != 0);
  CHECK(ce.basis.at(1, 0) == 0);
}

TEST_CASE("reduce_mod") {
  // span{(1,0)} over Z, ell = 5
  ZMat b1 = zmat({{1}, {0}});
  CHECK(reduce_mod(ZSubspace{b1}, 5).dim() == 1);
  // span{(5,5)} saturates to (1,1); rank survives mod 5
  ZMat b2 = zmat({{5}, {5}});
  FSubspace r2 = reduce_mod(ZSubspace{b2}, 5);
  CHECK(r2.dim() == 1);
  CHECK(r2.basis.at(0, 0) == r2.basis.at(1, 0));
  CHECK(r2.basis.at(0, 0) != 0);
  // zero subspace stays zero
  ZMat b3(ZZ{}, 4, 0);
  CHECK(reduce_mod(ZSubspace{b3}, 7).dim() == 0);
}

TEST_CASE("solve_z finds integer solutions") {
  ZMat a = zmat({{2, 0, 3}, {0, 5, 1}});
  std::vector<mpz_class> b = {7, 11};
  auto x = solve_z(a, b);
  REQUIRE(x);
  CHECK(2 * (*x)[0] + 3 * (*x)[2] == 7);
  CHECK(5 * (*x)[1] + (*x)[2] == 11);
  // no integer solution: 2x = 1
  ZMat a2 = zmat({{2}});
  CHECK_FALSE(solve_z(a2, {mpz_class(1)}));
}
