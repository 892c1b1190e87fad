#ifndef PPOLY_COSET_HPP
#define PPOLY_COSET_HPP

#include <map>
#include <string>
#include <vector>

#include "ppoly/int_util.hpp"

namespace ppoly {

// 2x2 integer matrix (row-major: (a b; c d)).
struct Mat22 {
  i64 a = 1, b = 0, c = 0, d = 1;

  i64 det() const { return a * d - b * c; }
  Mat22 mul(const Mat22& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat22 adj() const { return {d, -b, -c, a}; }
  // inverse of a determinant-one matrix
  Mat22 inv_det1() const { return adj(); }
  Mat22 neg() const { return {-a, -b, -c, -d}; }
  bool operator==(const Mat22& o) const = default;
  bool operator<(const Mat22& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return d < o.d;
  }
  // representative of {M, -M} with the first nonzero entry positive
  Mat22 sign_normalized() const {
    for (i64 v : {a, b, c, d}) {
      if (v > 0) return *this;
      if (v < 0) return neg();
    }
    return *this;
  }
  std::string str() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + "]";
  }
};

inline const Mat22 MAT_ID{1, 0, 0, 1};
inline const Mat22 MAT_S{0, -1, 1, 0};
inline const Mat22 MAT_U{1, -1, 1, 0};
inline const Mat22 MAT_T{1, 1, 0, 1};  // T = US
inline const Mat22 MAT_DELTA{-1, 0, 0, 1};

inline Mat22 mat_sigma(i64 N) { return {N, 0, 0, 1}; }
inline Mat22 mat_wN(i64 N) { return {0, -1, N, 0}; }

// Atkin-Lehner matrix for Q || N: (Qa b; Nc Qd) of determinant Q, with
// minimal nonnegative a; fixed per (Q, N) so serialized data is stable.
Mat22 atkin_lehner_mat(i64 Q, i64 N);

// The coset space Gamma_0(N)\SL_2(Z) as P^1(Z/N).  Labels are canonical
// pairs (c:d); the canonical representative of a class is the
// lexicographically smallest pair (u*c mod N, u*d mod N) over units u.
class CosetTable {
 public:
  explicit CosetTable(i64 N);

  i64 level() const { return N_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::pair<i64, i64>>& labels() const { return labels_; }

  std::pair<i64, i64> canonical(i64 c, i64 d) const;
  int index_of(i64 c, i64 d) const;

  // right action (c,d) -> (c,d) * g, det g = 1
  int act(int idx, const Mat22& g) const;
  // conjugation by delta: (c:d) -> (-c:d)
  int delta_conj(int idx) const;
  // SL_2(Z) representative with bottom row congruent to the label mod N
  Mat22 lift(int idx) const;

  // identity coset (0:1)
  int identity_index() const { return id_idx_; }

 private:
  i64 N_;
  std::vector<std::pair<i64, i64>> labels_;
  std::map<std::pair<i64, i64>, int> index_;
  std::vector<i64> units_;
  int id_idx_ = 0;
};

// Cached immutable tables.
const CosetTable& coset_table(i64 N);

// Level maps: project a label of level N to level M | N, and the fiber of a
// level-M label inside level N.
int project_label(i64 N, int idx, i64 M);
std::vector<int> fiber_of_label(i64 M, int idx, i64 N);

std::string label_str(i64 N, int idx);  // "c:d@N"

}  // namespace ppoly

#endif
