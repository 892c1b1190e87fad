#ifndef PPOLY_SPACE_HPP
#define PPOLY_SPACE_HPP

#include "ppoly/linalg.hpp"
#include "ppoly/poly.hpp"

namespace ppoly {

// A tuple P : P^1(Z/N) -> V_w, stored as one flat coordinate vector with
// coordinate (coset index)*(w+1) + degree.
template <class D>
struct VectorPoly {
  i64 N = 1;
  int w = 0;
  D dom;
  std::vector<typename D::Elem> coords;

  VectorPoly(const D& d, i64 N_, int w_)
      : N(N_), w(w_), dom(d), coords(static_cast<size_t>(coset_table(N_).size()) * (w_ + 1), d.zero()) {}

  int ncosets() const { return coset_table(N).size(); }
  int dim() const { return static_cast<int>(coords.size()); }

  typename D::Elem& at(int coset, int deg) { return coords[static_cast<size_t>(coset) * (w + 1) + deg]; }
  const typename D::Elem& at(int coset, int deg) const { return coords[static_cast<size_t>(coset) * (w + 1) + deg]; }

  std::vector<typename D::Elem> poly_at(int coset) const {
    auto it = coords.begin() + static_cast<size_t>(coset) * (w + 1);
    return std::vector<typename D::Elem>(it, it + w + 1);
  }

  bool operator==(const VectorPoly& o) const {
    if (N != o.N || w != o.w) return false;
    for (size_t i = 0; i < coords.size(); i++)
      if (!dom.eq(coords[i], o.coords[i])) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& c : coords)
      if (!dom.is_zero(c)) return false;
    return true;
  }
  VectorPoly scaled(const typename D::Elem& c) const {
    VectorPoly r = *this;
    for (auto& x : r.coords) x = dom.mul(x, c);
    return r;
  }
  VectorPoly operator-(const VectorPoly& o) const {
    VectorPoly r = *this;
    for (size_t i = 0; i < coords.size(); i++) r.coords[i] = dom.sub(coords[i], o.coords[i]);
    return r;
  }
};

using QVectorPoly = VectorPoly<QQ>;
using ZVectorPoly = VectorPoly<ZZ>;
using FVectorPoly = VectorPoly<Fp>;

// Matrix of P |-> P|g on V_w(N): (P|g)(A) = P(A g^{-1}) |_{-w} g.
template <class D>
DMat<D> group_act_matrix(const D& dom, i64 N, int w, const Mat22& g) {
  if (g.det() != 1) throw std::domain_error("group_act_matrix: determinant must be 1");
  const CosetTable& tbl = coset_table(N);
  const int nc = tbl.size(), blk = w + 1;
  DMat<D> sm = slash_matrix(dom, g, w);
  DMat<D> op(dom, nc * blk, nc * blk);
  Mat22 ginv = g.inv_det1();
  for (int A = 0; A < nc; A++) {
    int src = tbl.act(A, ginv);
    for (int i = 0; i < blk; i++)
      for (int j = 0; j < blk; j++) op.at(A * blk + i, src * blk + j) = sm.at(i, j);
  }
  return op;
}

template <class D>
VectorPoly<D> group_act(const VectorPoly<D>& p, const Mat22& g) {
  VectorPoly<D> r(p.dom, p.N, p.w);
  r.coords = group_act_matrix(p.dom, p.N, p.w, g).apply(p.coords);
  return r;
}

// Matrix of the involution P |-> P|delta, (P|delta)(A) = P(dAd) |_{-w} delta.
template <class D>
DMat<D> delta_act_matrix(const D& dom, i64 N, int w) {
  const CosetTable& tbl = coset_table(N);
  const int nc = tbl.size(), blk = w + 1;
  DMat<D> op(dom, nc * blk, nc * blk);
  for (int A = 0; A < nc; A++) {
    int src = tbl.delta_conj(A);
    for (int j = 0; j < blk; j++) op.at(A * blk + j, src * blk + j) = (j % 2 == 0) ? dom.one() : dom.neg(dom.one());
  }
  return op;
}

template <class D>
VectorPoly<D> delta_act(const VectorPoly<D>& p) {
  VectorPoly<D> r(p.dom, p.N, p.w);
  r.coords = delta_act_matrix(p.dom, p.N, p.w).apply(p.coords);
  return r;
}

// Trace map to level M | N: (tr P)(C) = sum over the fiber of C.
template <class D>
DMat<D> trace_matrix(const D& dom, i64 N, i64 M, int w) {
  if (N % M != 0) throw std::domain_error("trace_matrix: M must divide N");
  const int blk = w + 1;
  const int ncN = coset_table(N).size(), ncM = coset_table(M).size();
  DMat<D> op(dom, ncM * blk, ncN * blk);
  for (int A = 0; A < ncN; A++) {
    int C = project_label(N, A, M);
    for (int j = 0; j < blk; j++) op.at(C * blk + j, A * blk + j) = dom.add(op.at(C * blk + j, A * blk + j), dom.one());
  }
  return op;
}

// Inclusion from level M to level N: (i P)(A) = P(projection of A).
template <class D>
DMat<D> include_matrix(const D& dom, i64 M, i64 N, int w) {
  if (N % M != 0) throw std::domain_error("include_matrix: M must divide N");
  const int blk = w + 1;
  const int ncN = coset_table(N).size(), ncM = coset_table(M).size();
  DMat<D> op(dom, ncN * blk, ncM * blk);
  for (int A = 0; A < ncN; A++) {
    int C = project_label(N, A, M);
    for (int j = 0; j < blk; j++) op.at(A * blk + j, C * blk + j) = dom.one();
  }
  return op;
}

template <class D>
VectorPoly<D> trace_to(const VectorPoly<D>& p, i64 M) {
  VectorPoly<D> r(p.dom, M, p.w);
  r.coords = trace_matrix(p.dom, p.N, M, p.w).apply(p.coords);
  return r;
}

template <class D>
VectorPoly<D> include_to(const VectorPoly<D>& p, i64 N) {
  VectorPoly<D> r(p.dom, N, p.w);
  r.coords = include_matrix(p.dom, p.N, N, p.w).apply(p.coords);
  return r;
}

// Stacked relation matrix whose kernel is the period polynomial space:
// rows for P|(1+S) followed by rows for P|(1+U+U^2).
template <class D>
DMat<D> relation_matrix(const D& dom, i64 N, int w) {
  auto id = DMat<D>::identity(dom, coset_table(N).size() * (w + 1));
  auto rs = id + group_act_matrix(dom, N, w, MAT_S);
  auto ru = id + group_act_matrix(dom, N, w, MAT_U) + group_act_matrix(dom, N, w, MAT_U.mul(MAT_U));
  return rs.stacked(ru);
}

// W_w(N) over the given domain. Over Z the basis is a saturated lattice.
QSubspace build_w_q(i64 N, int w);
ZSubspace build_w_z(i64 N, int w);
FSubspace build_w_f(i64 N, int w, i64 ell);

// delta eigenspace split of a subspace of V_w(N); returns (plus, minus).
template <class D>
std::pair<Subspace<D>, Subspace<D>> split_pm(const D& dom, i64 N, int w, const Subspace<D>& s) {
  static_assert(D::is_field);
  if (dom.characteristic() == 2) throw std::domain_error("split_pm: characteristic 2 not allowed");
  DMat<D> dm = delta_act_matrix(dom, N, w);
  auto images = dm * s.basis;
  auto restricted = solve_in_basis(s.basis, images);
  if (!restricted) throw std::runtime_error("split_pm: delta does not preserve the subspace");
  auto plus = eigenspace(*restricted, dom.one());
  auto minus = eigenspace(*restricted, dom.neg(dom.one()));
  return {Subspace<D>{s.basis * plus.basis}, Subspace<D>{s.basis * minus.basis}};
}

// Checks the unipotent-action facts used for the reduction arguments on
// V_w(F_ell) with u = (1 a; 0 1):  im(1-u) is the polynomials of degree
// < w, ker(1-u) is the constants, and the norm 1+u+...+u^{ell-1} is zero.
bool lemma_unipotent_check(int w, i64 ell, i64 a);

}  // namespace ppoly

#endif
