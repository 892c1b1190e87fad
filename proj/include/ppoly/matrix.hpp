#ifndef PPOLY_MATRIX_HPP
#define PPOLY_MATRIX_HPP

#include <cassert>
#include <vector>

#include "ppoly/domain.hpp"

namespace ppoly {

// Dense matrix over a coefficient domain.  Rows and columns are 0-based;
// entries are stored row-major.
template <class D>
struct DMat {
  using Elem = typename D::Elem;
  D dom;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  DMat(const D& d, int r, int c) : dom(d), rows(r), cols(c), a(static_cast<size_t>(r) * c, d.zero()) {}

  Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static DMat identity(const D& d, int n) {
    DMat m(d, n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = d.one();
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!dom.is_zero(x)) return false;
    return true;
  }

  DMat operator*(const DMat& o) const {
    assert(cols == o.rows);
    DMat r(dom, rows, o.cols);
    for (int i = 0; i < rows; i++)
      for (int k = 0; k < cols; k++) {
        const Elem& aik = at(i, k);
        if (dom.is_zero(aik)) continue;
        for (int j = 0; j < o.cols; j++) {
          if (dom.is_zero(o.at(k, j))) continue;
          r.at(i, j) = dom.add(r.at(i, j), dom.mul(aik, o.at(k, j)));
        }
      }
    return r;
  }

  DMat operator+(const DMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    DMat r(dom, rows, cols);
    for (size_t i = 0; i < a.size(); i++) r.a[i] = dom.add(a[i], o.a[i]);
    return r;
  }

  DMat operator-(const DMat& o) const {
    assert(rows == o.rows && cols == o.cols);
    DMat r(dom, rows, cols);
    for (size_t i = 0; i < a.size(); i++) r.a[i] = dom.sub(a[i], o.a[i]);
    return r;
  }

  bool operator==(const DMat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t i = 0; i < a.size(); i++)
      if (!dom.eq(a[i], o.a[i])) return false;
    return true;
  }

  DMat transpose() const {
    DMat r(dom, cols, rows);
    for (int i = 0; i < rows; i++)
      for (int j = 0; j < cols; j++) r.at(j, i) = at(i, j);
    return r;
  }

  DMat scaled(const Elem& c) const {
    DMat r(dom, rows, cols);
    for (size_t i = 0; i < a.size(); i++) r.a[i] = dom.mul(a[i], c);
    return r;
  }

  // Vertical stack: this on top of o.
  DMat stacked(const DMat& o) const {
    assert(cols == o.cols);
    DMat r(dom, rows + o.rows, cols);
    std::copy(a.begin(), a.end(), r.a.begin());
    std::copy(o.a.begin(), o.a.end(), r.a.begin() + a.size());
    return r;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    std::vector<Elem> out(rows, dom.zero());
    for (int i = 0; i < rows; i++)
      for (int j = 0; j < cols; j++)
        if (!dom.is_zero(at(i, j))) out[i] = dom.add(out[i], dom.mul(at(i, j), v[j]));
    return out;
  }

  std::vector<Elem> col(int j) const {
    std::vector<Elem> out(rows, dom.zero());
    for (int i = 0; i < rows; i++) out[i] = at(i, j);
    return out;
  }

  void set_col(int j, const std::vector<Elem>& v) {
    for (int i = 0; i < rows; i++) at(i, j) = v[i];
  }
};

using QMat = DMat<QQ>;
using ZMat = DMat<ZZ>;
using FMat = DMat<Fp>;

// Domain-converting copies.
inline ZMat qmat_to_zmat_rowscaled(const QMat& m) {
  // Scales each row to integer entries; suitable where row scaling is
  // harmless (rank, kernel).
  ZMat r(ZZ{}, m.rows, m.cols);
  for (int i = 0; i < m.rows; i++) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols; j++) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols; j++) {
      Rat v = m.at(i, j) * Rat(l);
      r.at(i, j) = v.get_num();
    }
  }
  return r;
}

inline QMat zmat_to_qmat(const ZMat& m) {
  QMat r(QQ{}, m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) r.a[i] = Rat(m.a[i]);
  return r;
}

inline FMat zmat_mod(const ZMat& m, const Fp& f) {
  FMat r(f, m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) r.a[i] = f.from_mpz(m.a[i]);
  return r;
}

inline FMat qmat_mod(const QMat& m, const Fp& f) {
  FMat r(f, m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) r.a[i] = f.from_mpq(m.a[i]);
  return r;
}

}  // namespace ppoly

#endif
