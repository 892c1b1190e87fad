#ifndef PPOLY_HECKE_HPP
#define PPOLY_HECKE_HPP

#include <map>
#include <optional>

#include "ppoly/space.hpp"

namespace ppoly {

// Formal integer combination of determinant-n matrices modulo M ~ -M.
struct FormalMatrixSum {
  i64 n = 1;
  std::map<Mat22, i64> terms;  // keys sign-normalized, coefficients nonzero

  void add(const Mat22& m, i64 coeff);
  size_t support_size() const { return terms.size(); }
  bool operator==(const FormalMatrixSum& o) const { return n == o.n && terms == o.terms; }
};

// Representatives fixing infinity for Gamma_1 \ M_n:
// {(a b; 0 d) : ad = n, 0 <= b < d}; count sigma_1(n).
std::vector<Mat22> coset_reps_infty(i64 n);

// The determinant-n set {(a b; c d) : ad-bc = n, a > c >= 0, d > b >= 0}
// with unit coefficients; candidate Hecke element.
FormalMatrixSum zagier_element(i64 n);

// Convolution product (all pairwise products of support matrices).
FormalMatrixSum product(const FormalMatrixSum& x, const FormalMatrixSum& y);

// Defect of the Hecke relation: forms
//   D = T^infty_n (1 - S) - (1 - S) * tt
// and reports whether D lies in (1-T) R_n, i.e. whether the coefficient sum
// of D along every orbit of left multiplication by T vanishes.
struct CzReport {
  bool ok = false;
  std::optional<Mat22> witness_orbit;
  i64 witness_sum = 0;
};
CzReport cz_defect(const FormalMatrixSum& tt, i64 n);

// Fallback construction: solve for integer coefficients supported on
// determinant-n matrices with entries bounded by `bound`.
std::optional<FormalMatrixSum> solve_hecke_element(i64 n, i64 bound);

// A verified Hecke element for determinant n; deterministic, cached, and
// re-checked with cz_defect. Throws if no construction succeeds.
const FormalMatrixSum& hecke_element(i64 n);

// Double cosets acting on V_w(N).
struct DoubleCosetSpec {
  enum class Kind { HeckeCoprime, AtkinLehner } kind;
  i64 n;  // determinant of the acting matrices
  i64 N;  // level
  i64 Q;  // exact divisor, Atkin-Lehner only

  static DoubleCosetSpec hecke(i64 n, i64 N);
  static DoubleCosetSpec atkin_lehner(i64 Q, i64 N);
  std::string str() const;
};

// Membership of an integer matrix in the double coset.
bool sigma_contains(const DoubleCosetSpec& spec, const Mat22& y);

// Decomposition step of the double-coset action: given M of determinant n
// and a coset label A, finds the label A_M with A_M * (M * lift(A)^{-1})
// in the double coset, or nothing when M carries no contribution at A.
std::optional<int> decompose(const Mat22& m, int label_idx, const DoubleCosetSpec& spec);

// Numerical check that Gamma \ Sigma -> Gamma_1 \ Gamma_1 Sigma is a
// bijection (each infinity-fixing representative supports exactly one
// Gamma-coset). Cached; throws on failure.
void require_eq_star(const DoubleCosetSpec& spec);

// Matrix of P -> sum_M c_M P(A_M)|_{-w} M on V_w(N).
template <class D>
DMat<D> sigma_op_matrix(const D& dom, i64 N, int w, const DoubleCosetSpec& spec, const FormalMatrixSum& tt) {
  if (tt.n != spec.n) throw std::domain_error("sigma_op_matrix: determinant mismatch");
  if (!cz_defect(tt, tt.n).ok) throw std::domain_error("sigma_op_matrix: element fails the Hecke relation");
  require_eq_star(spec);
  const CosetTable& tbl = coset_table(N);
  const int nc = tbl.size(), blk = w + 1;
  DMat<D> op(dom, nc * blk, nc * blk);
  for (const auto& [m, coeff] : tt.terms) {
    DMat<D> sm = slash_matrix(dom, m, w).scaled(dom.from_int(coeff));
    for (int A = 0; A < nc; A++) {
      auto am = decompose(m, A, spec);
      if (!am) continue;
      for (int i = 0; i < blk; i++)
        for (int j = 0; j < blk; j++)
          op.at(A * blk + i, *am * blk + j) = dom.add(op.at(A * blk + i, *am * blk + j), sm.at(i, j));
    }
  }
  return op;
}

template <class D>
VectorPoly<D> act_sigma(const VectorPoly<D>& p, const DoubleCosetSpec& spec, const FormalMatrixSum& tt) {
  VectorPoly<D> r(p.dom, p.N, p.w);
  r.coords = sigma_op_matrix(p.dom, p.N, p.w, spec, tt).apply(p.coords);
  return r;
}

// Full-space operator matrices on V_w(N) (cached for Q and F_ell).
QMat hecke_full_q(i64 N, int w, i64 n);
FMat hecke_full_f(i64 N, int w, i64 n, i64 ell);
// Unnormalized Atkin-Lehner double-coset action.
QMat atkin_lehner_full_q(i64 N, int w, i64 Q);
FMat atkin_lehner_full_f(i64 N, int w, i64 Q, i64 ell);

// Operators restricted to the period polynomial space W_w(N), in the basis
// produced by build_w; the Atkin-Lehner matrix carries the Q^{-w/2}
// normalization.
QMat hecke_matrix_q(i64 N, int w, i64 n);
FMat hecke_matrix_f(i64 N, int w, i64 n, i64 ell);
QMat atkin_lehner_matrix_q(i64 N, int w, i64 Q);
FMat atkin_lehner_matrix_f(i64 N, int w, i64 Q, i64 ell);

}  // namespace ppoly

#endif
