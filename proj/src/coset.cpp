#include "ppoly/coset.hpp"

#include <mutex>

namespace ppoly {

Mat22 atkin_lehner_mat(i64 Q, i64 N) {
  if (Q <= 0 || N % Q != 0 || gcd_i64(Q, N / Q) != 1)
    throw std::domain_error("atkin_lehner_mat: Q must exactly divide N");
  if (Q == N) return mat_wN(N);
  // Q*a*d - (N/Q)*b*c = 1 with minimal nonnegative a
  i64 R = N / Q;
  for (i64 a = 0;; a++) {
    // solve Q*a*d ≡ 1 (mod R) for d, then lift b*c
    auto [g, x, y] = xgcd_i64(Q * a, R);
    if (g != 1) continue;
    i64 d = mod_pos(x, R);
    if (a == 0) continue;  // needs Q*0*d = 1 + (N/Q)*b*c, handled by a>0 anyway
    i64 num = Q * a * d - 1;
    i64 bc = num / R;  // exact by construction
    // factor bc = b*c with b = bc, c = 1
    return {Q * a, bc, N * 1, Q * d};
  }
}

CosetTable::CosetTable(i64 N) : N_(N) {
  if (N < 1) throw std::domain_error("CosetTable: N must be positive");
  for (i64 u = 0; u < N; u++)
    if (gcd_i64(u, N) == 1) units_.push_back(u);
  if (N == 1) units_ = {0};  // the single residue acts as the unit
  for (i64 c = 0; c < N; c++)
    for (i64 d = 0; d < N; d++) {
      if (gcd_i64(gcd_i64(c, d), N_) != 1) continue;
      if (canonical(c, d) == std::make_pair(c, d)) {
        index_[{c, d}] = static_cast<int>(labels_.size());
        labels_.emplace_back(c, d);
      }
    }
  if (N == 1) {
    labels_ = {{0, 0}};
    index_.clear();
    index_[{0, 0}] = 0;
  }
  id_idx_ = index_of(0, 1);
}

std::pair<i64, i64> CosetTable::canonical(i64 c, i64 d) const {
  if (N_ == 1) return {0, 0};
  c = mod_pos(c, N_);
  d = mod_pos(d, N_);
  std::pair<i64, i64> best{N_, N_};
  for (i64 u : units_) {
    std::pair<i64, i64> cand{mod_pos(u * c, N_), mod_pos(u * d, N_)};
    if (cand < best) best = cand;
  }
  return best;
}

int CosetTable::index_of(i64 c, i64 d) const {
  auto it = index_.find(canonical(c, d));
  if (it == index_.end()) throw std::domain_error("CosetTable: (c,d) not a point of P^1(Z/N)");
  return it->second;
}

int CosetTable::act(int idx, const Mat22& g) const {
  if (g.det() != 1) throw std::domain_error("CosetTable::act: determinant must be 1");
  auto [c, d] = labels_[idx];
  return index_of(c * g.a + d * g.c, c * g.b + d * g.d);
}

int CosetTable::delta_conj(int idx) const {
  auto [c, d] = labels_[idx];
  return index_of(-c, d);
}

Mat22 CosetTable::lift(int idx) const {
  auto [c, d] = labels_[idx];
  if (N_ == 1) return MAT_ID;
  // choose a representative (c0,d0) = (c, d + t*N) with gcd(c0,d0) = 1
  i64 c0 = c, d0 = d;
  if (c0 == 0) {
    c0 = N_;  // gcd(N, d) = 1 for the class of (0:d)
  }
  for (i64 t = 0;; t++) {
    if (gcd_i64(c0, d0 + t * N_) == 1) {
      d0 = d0 + t * N_;
      break;
    }
  }
  auto [g, x, y] = xgcd_i64(d0, c0);  // x*d0 + y*c0 = 1
  Mat22 m{x, -y, c0, d0};
  // reduce the top row modulo the bottom row, keeping entries small
  if (c0 != 0 || d0 != 0) {
    i64 q = 0;
    if (d0 != 0)
      q = (2 * m.b + d0) / (2 * d0);
    else
      q = (2 * m.a + c0) / (2 * c0);
    m.a -= q * c0;
    m.b -= q * d0;
  }
  if (m.det() != 1) throw std::logic_error("CosetTable::lift: representative not unimodular");
  return m;
}

const CosetTable& coset_table(i64 N) {
  static std::map<i64, CosetTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, CosetTable(N)).first;
  return it->second;
}

int project_label(i64 N, int idx, i64 M) {
  if (N % M != 0) throw std::domain_error("project_label: M must divide N");
  const CosetTable& tn = coset_table(N);
  const CosetTable& tm = coset_table(M);
  auto [c, d] = tn.labels()[idx];
  if (M == 1) return 0;
  return tm.index_of(mod_pos(c, M), mod_pos(d, M));
}

std::vector<int> fiber_of_label(i64 M, int idx, i64 N) {
  if (N % M != 0) throw std::domain_error("fiber_of_label: M must divide N");
  const CosetTable& tn = coset_table(N);
  std::vector<int> out;
  for (int j = 0; j < tn.size(); j++)
    if (project_label(N, j, M) == idx) out.push_back(j);
  return out;
}

std::string label_str(i64 N, int idx) {
  auto [c, d] = coset_table(N).labels()[idx];
  if (N == 1) return "0:1@1";
  return std::to_string(c) + ":" + std::to_string(d) + "@" + std::to_string(N);
}

}  // namespace ppoly
