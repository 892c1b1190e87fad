#include "ppoly/space.hpp"

#include <mutex>

namespace ppoly {

namespace {

void check_build_args(i64 N, int w, long characteristic) {
  if (w < 0 || w % 2 != 0) throw std::domain_error("build_w: w must be even and nonnegative");
  if (N < 1) throw std::domain_error("build_w: N must be positive");
  if (characteristic == 2 || characteristic == 3) throw std::domain_error("build_w: characteristic 2 and 3 excluded");
}

}  // namespace

QSubspace build_w_q(i64 N, int w) {
  check_build_args(N, w, 0);
  static std::map<std::pair<i64, int>, QSubspace> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, w);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, kernel(relation_matrix(QQ{}, N, w))).first;
  return it->second;
}

ZSubspace build_w_z(i64 N, int w) {
  check_build_args(N, w, 0);
  static std::map<std::pair<i64, int>, ZSubspace> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, w);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, kernel(relation_matrix(ZZ{}, N, w))).first;
  return it->second;
}

FSubspace build_w_f(i64 N, int w, i64 ell) {
  Fp f(ell);
  check_build_args(N, w, f.characteristic());
  static std::map<std::tuple<i64, int, i64>, FSubspace> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(N, w, ell);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, kernel(relation_matrix(f, N, w))).first;
  return it->second;
}

bool lemma_unipotent_check(int w, i64 ell, i64 a) {
  if (ell <= w) throw std::domain_error("lemma_unipotent_check: requires ell > w");
  if (a % ell == 0) throw std::domain_error("lemma_unipotent_check: requires ell coprime to a");
  Fp f(ell);
  FMat u = slash_matrix(f, Mat22{1, a, 0, 1}, w);
  FMat one_minus_u = FMat::identity(f, w + 1) - u;
  // ker(1-u) = constants
  FSubspace ker = kernel(one_minus_u);
  if (ker.dim() != 1) return false;
  if (f.is_zero(ker.basis.at(0, 0))) return false;
  for (int i = 1; i <= w; i++)
    if (!f.is_zero(ker.basis.at(i, 0))) return false;
  // im(1-u) = polynomials of degree <= w-1: rank w and bottom row zero
  if (rank_field(one_minus_u) != w) return false;
  for (int j = 0; j <= w; j++)
    if (!f.is_zero(one_minus_u.at(w, j))) return false;
  // norm map 1 + u + ... + u^{ell-1} vanishes identically
  FMat norm(f, w + 1, w + 1);
  FMat upow = FMat::identity(f, w + 1);
  for (i64 t = 0; t < ell; t++) {
    norm = norm + upow;
    upow = upow * u;
  }
  return norm.is_zero();
}

}  // namespace ppoly
