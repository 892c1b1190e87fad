#ifndef PPOLY_LINALG_HPP
#define PPOLY_LINALG_HPP

#include <optional>

#include "ppoly/matrix.hpp"

namespace ppoly {

// ---- integer elimination (Bareiss / HNF), defined in linalg.cpp ----

// Rank of an integer matrix (fraction-free elimination).
int rank_z(const ZMat& m);

// Basis of the rational kernel; columns are primitive integer vectors.
ZMat kernel_z_rational(const ZMat& m);

// Basis of {x in Z^n : m x = 0}; saturated by construction (column-style
// Hermite reduction with transform).
ZMat kernel_z_saturated(const ZMat& m);

// Invariant factors d_1 | d_2 | ... of an integer matrix.
std::vector<mpz_class> snf_diagonal(ZMat m);

// Saturation of the column lattice of b (full column rank expected).
ZMat saturate_lattice(const ZMat& b);

// Divides each column by its content; drops nothing.
ZMat primitive_columns(ZMat b);

// One integer solution of a x = b, if any exists.
std::optional<std::vector<mpz_class>> solve_z(const ZMat& a, const std::vector<mpz_class>& b);

// ---- generic field routines ----

template <class D>
int rank_field(DMat<D> m) {
  static_assert(D::is_field);
  const D& dom = m.dom;
  int r = 0;
  for (int j = 0; j < m.cols && r < m.rows; j++) {
    int piv = -1;
    for (int i = r; i < m.rows; i++)
      if (!dom.is_zero(m.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int jj = 0; jj < m.cols; jj++) std::swap(m.at(r, jj), m.at(piv, jj));
    auto ip = dom.inv(m.at(r, j));
    for (int i = r + 1; i < m.rows; i++) {
      if (dom.is_zero(m.at(i, j))) continue;
      auto f = dom.mul(m.at(i, j), ip);
      for (int jj = j; jj < m.cols; jj++) m.at(i, jj) = dom.sub(m.at(i, jj), dom.mul(f, m.at(r, jj)));
    }
    r++;
  }
  return r;
}

// Kernel over a field via reduced row echelon form.
template <class D>
DMat<D> kernel_field(DMat<D> m) {
  static_assert(D::is_field);
  const D dom = m.dom;
  const int n = m.cols;
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < n && r < m.rows; j++) {
    int piv = -1;
    for (int i = r; i < m.rows; i++)
      if (!dom.is_zero(m.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int jj = 0; jj < n; jj++) std::swap(m.at(r, jj), m.at(piv, jj));
    auto ip = dom.inv(m.at(r, j));
    for (int jj = j; jj < n; jj++) m.at(r, jj) = dom.mul(m.at(r, jj), ip);
    for (int i = 0; i < m.rows; i++) {
      if (i == r || dom.is_zero(m.at(i, j))) continue;
      auto f = m.at(i, j);
      for (int jj = j; jj < n; jj++) m.at(i, jj) = dom.sub(m.at(i, jj), dom.mul(f, m.at(r, jj)));
    }
    pivot_col.push_back(j);
    r++;
  }
  std::vector<bool> is_piv(n, false);
  for (int c : pivot_col) is_piv[c] = true;
  DMat<D> ker(dom, n, n - r);
  int kcol = 0;
  for (int j = 0; j < n; j++) {
    if (is_piv[j]) continue;
    ker.at(j, kcol) = dom.one();
    for (int i = 0; i < r; i++) ker.at(pivot_col[i], kcol) = dom.neg(m.at(i, j));
    kcol++;
  }
  return ker;
}

// Solves b * x = y exactly over a field; b must have full column rank.
// Returns nullopt when some column of y lies outside the span of b.
template <class D>
std::optional<DMat<D>> solve_in_basis(const DMat<D>& b, const DMat<D>& y) {
  static_assert(D::is_field);
  const D dom = b.dom;
  assert(b.rows == y.rows);
  const int n = b.rows, r = b.cols, s = y.cols;
  DMat<D> m(dom, n, r + s);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < r; j++) m.at(i, j) = b.at(i, j);
    for (int j = 0; j < s; j++) m.at(i, r + j) = y.at(i, j);
  }
  std::vector<int> pivot_row(r, -1);
  int row = 0;
  for (int j = 0; j < r; j++) {
    int piv = -1;
    for (int i = row; i < n; i++)
      if (!dom.is_zero(m.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;  // not full column rank
    for (int jj = 0; jj < r + s; jj++) std::swap(m.at(row, jj), m.at(piv, jj));
    auto ip = dom.inv(m.at(row, j));
    for (int jj = j; jj < r + s; jj++) m.at(row, jj) = dom.mul(m.at(row, jj), ip);
    for (int i = 0; i < n; i++) {
      if (i == row || dom.is_zero(m.at(i, j))) continue;
      auto f = m.at(i, j);
      for (int jj = j; jj < r + s; jj++) m.at(i, jj) = dom.sub(m.at(i, jj), dom.mul(f, m.at(row, jj)));
    }
    pivot_row[j] = row;
    row++;
  }
  // rows beyond the pivots must have zero right-hand side
  for (int i = row; i < n; i++)
    for (int j = 0; j < s; j++)
      if (!dom.is_zero(m.at(i, r + j))) return std::nullopt;
  DMat<D> x(dom, r, s);
  for (int j = 0; j < r; j++)
    for (int c = 0; c < s; c++) x.at(j, c) = m.at(pivot_row[j], r + c);
  return x;
}

// Characteristic polynomial (monic, coefficients ascending) via Hessenberg
// reduction; works over any field.
template <class D>
std::vector<typename D::Elem> charpoly_field(DMat<D> h) {
  static_assert(D::is_field);
  const D dom = h.dom;
  assert(h.rows == h.cols);
  const int n = h.rows;
  // similarity reduction to upper Hessenberg form
  for (int k = 1; k < n; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (!dom.is_zero(h.at(i, k - 1))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k) {
      for (int j = 0; j < n; j++) std::swap(h.at(k, j), h.at(piv, j));
      for (int i = 0; i < n; i++) std::swap(h.at(i, k), h.at(i, piv));
    }
    auto ip = dom.inv(h.at(k, k - 1));
    for (int i = k + 1; i < n; i++) {
      if (dom.is_zero(h.at(i, k - 1))) continue;
      auto f = dom.mul(h.at(i, k - 1), ip);
      for (int j = 0; j < n; j++) h.at(i, j) = dom.sub(h.at(i, j), dom.mul(f, h.at(k, j)));
      for (int j = 0; j < n; j++) h.at(j, k) = dom.add(h.at(j, k), dom.mul(f, h.at(j, i)));
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1}(x) - sum_i h_im (prod subdiag) p_{i-1}(x)
  std::vector<std::vector<typename D::Elem>> p(n + 1);
  p[0] = {dom.one()};
  for (int m = 1; m <= n; m++) {
    std::vector<typename D::Elem> pm(m + 1, dom.zero());
    for (int t = 0; t < m; t++) pm[t + 1] = dom.add(pm[t + 1], p[m - 1][t]);
    for (int t = 0; t < m; t++) pm[t] = dom.sub(pm[t], dom.mul(h.at(m - 1, m - 1), p[m - 1][t]));
    auto prod = dom.one();
    for (int i = m - 1; i >= 1; i--) {
      prod = dom.mul(prod, h.at(i, i - 1));
      auto c = dom.mul(h.at(i - 1, m - 1), prod);
      if (dom.is_zero(c)) continue;
      for (int t = 0; t < i; t++) pm[t] = dom.sub(pm[t], dom.mul(c, p[i - 1][t]));
    }
    p[m] = std::move(pm);
  }
  return p[n];
}

// ---- subspaces ----

// Ordered basis of a subspace of the ambient coordinate space; columns of
// `basis` are the basis vectors.
template <class D>
struct Subspace {
  DMat<D> basis;
  int ambient() const { return basis.rows; }
  int dim() const { return basis.cols; }
};

using QSubspace = Subspace<QQ>;
using ZSubspace = Subspace<ZZ>;
using FSubspace = Subspace<Fp>;

QSubspace kernel(const QMat& m);
ZSubspace kernel(const ZMat& m);  // saturated integer kernel
FSubspace kernel(const FMat& m);

int rank(const QMat& m);
int rank(const ZMat& m);
int rank(const FMat& m);

template <class D>
Subspace<D> eigenspace(const DMat<D>& m, const typename D::Elem& lambda) {
  assert(m.rows == m.cols);
  DMat<D> shifted = m;
  for (int i = 0; i < m.rows; i++) shifted.at(i, i) = m.dom.sub(shifted.at(i, i), lambda);
  return {kernel_field(shifted)};
}

template <class D>
Subspace<D> common_eigenspace(const std::vector<std::pair<DMat<D>, typename D::Elem>>& pairs) {
  if (pairs.empty()) throw std::domain_error("common_eigenspace: empty input");
  const D dom = pairs[0].first.dom;
  int n = pairs[0].first.cols;
  DMat<D> stack(dom, 0, n);
  for (const auto& [m, lambda] : pairs) {
    if (m.rows != n || m.cols != n) throw std::domain_error("common_eigenspace: dimension mismatch");
    DMat<D> shifted = m;
    for (int i = 0; i < n; i++) shifted.at(i, i) = dom.sub(shifted.at(i, i), lambda);
    stack = stack.stacked(shifted);
  }
  return {kernel_field(stack)};
}

// Reduction of an integral (or rational) subspace mod ell: clears
// denominators, saturates the lattice, reduces. The result always has the
// same rank as the input.
FSubspace reduce_mod(const ZSubspace& s, i64 ell);
FSubspace reduce_mod(const QSubspace& s, i64 ell);

// Restriction of an endomorphism to an invariant subspace, expressed in the
// basis of the subspace; throws if the subspace is not invariant.
template <class D>
DMat<D> restrict_operator(const DMat<D>& full, const Subspace<D>& s) {
  auto c = solve_in_basis(s.basis, full * s.basis);
  if (!c) throw std::runtime_error("restrict_operator: subspace is not invariant");
  return *c;
}

// Membership of a vector in the span of a subspace basis.
template <class D>
bool in_span(const Subspace<D>& s, const std::vector<typename D::Elem>& v) {
  DMat<D> y(s.basis.dom, s.ambient(), 1);
  for (int i = 0; i < s.ambient(); i++) y.at(i, 0) = v[i];
  if (s.dim() == 0) {
    for (auto& e : y.a)
      if (!y.dom.is_zero(e)) return false;
    return true;
  }
  return solve_in_basis(s.basis, y).has_value();
}

}  // namespace ppoly

#endif
