#include "ppoly/linalg.hpp"

#include <algorithm>

namespace ppoly {

namespace {

mpz_class vec_content(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

struct BareissResult {
  ZMat m;                     // eliminated matrix (upper triangular on pivot block)
  std::vector<int> col_perm;  // logical column j lives at physical col_perm[j]
  int rank = 0;
};

// Fraction-free forward elimination with full pivoting; pivots chosen with
// minimal absolute value to limit growth.
BareissResult bareiss(ZMat m) {
  const int rows = m.rows, cols = m.cols;
  std::vector<int> perm(cols);
  for (int j = 0; j < cols; j++) perm[j] = j;
  mpz_class prev = 1;
  int k = 0;
  while (k < rows && k < cols) {
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = k; i < rows; i++)
      for (int j = k; j < cols; j++) {
        const mpz_class& v = m.at(i, perm[j]);
        if (v == 0) continue;
        mpz_class av = abs(v);
        if (pi < 0 || av < best) {
          best = av;
          pi = i;
          pj = j;
          if (best == 1) goto found;
        }
      }
    if (pi < 0) break;
  found:
    if (pi != k)
      for (int j = 0; j < cols; j++) std::swap(m.at(k, j), m.at(pi, j));
    std::swap(perm[k], perm[pj]);
    const mpz_class piv = m.at(k, perm[k]);
    for (int i = k + 1; i < rows; i++) {
      const mpz_class mik = m.at(i, perm[k]);
      for (int j = k + 1; j < cols; j++) {
        mpz_class t = m.at(i, perm[j]) * piv - mik * m.at(k, perm[j]);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, perm[j]) = t;
      }
      m.at(i, perm[k]) = 0;
    }
    prev = piv;
    k++;
  }
  return {std::move(m), std::move(perm), k};
}

}  // namespace

int rank_z(const ZMat& m) { return bareiss(m).rank; }

ZMat kernel_z_rational(const ZMat& m) {
  auto br = bareiss(m);
  const int n = m.cols, r = br.rank;
  ZMat ker(ZZ{}, n, n - r);
  for (int f = r; f < n; f++) {
    // solve the triangular system for the pivot coordinates over Q
    std::vector<Rat> x(r);
    for (int i = r - 1; i >= 0; i--) {
      Rat s = Rat(br.m.at(i, br.col_perm[f]));
      for (int j = i + 1; j < r; j++) s += Rat(br.m.at(i, br.col_perm[j])) * x[j];
      x[i] = -s / Rat(br.m.at(i, br.col_perm[i]));
    }
    mpz_class den = 1;
    for (int i = 0; i < r; i++) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x[i].get_den().get_mpz_t());
    std::vector<mpz_class> v(n, 0);
    v[br.col_perm[f]] = den;
    for (int i = 0; i < r; i++) v[br.col_perm[i]] = mpz_class(x[i] * Rat(den));
    mpz_class c = vec_content(v);
    if (c > 1)
      for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), c.get_mpz_t());
    for (int i = 0; i < n; i++) ker.at(i, f - r) = v[i];
  }
  return ker;
}

namespace {

// Column-style Hermite reduction of a alongside the transform v.
// Postcondition: columns >= (returned rank) of a are identically zero.
int hnf_cols_with_transform(ZMat& a, ZMat& v) {
  const int rows = a.rows, cols = a.cols;
  auto colop_combine = [&](int jc, int jo, const mpz_class& x, const mpz_class& y, const mpz_class& u,
                           const mpz_class& w) {
    // (col_jc, col_jo) <- (x*col_jc + y*col_jo, u*col_jo - w*col_jc)
    for (ZMat* mp : {&a, &v}) {
      ZMat& m = *mp;
      for (int i = 0; i < m.rows; i++) {
        mpz_class cjc = m.at(i, jc), cjo = m.at(i, jo);
        m.at(i, jc) = x * cjc + y * cjo;
        m.at(i, jo) = u * cjo - w * cjc;
      }
    }
  };
  auto colop_addmul = [&](int jdst, int jsrc, const mpz_class& q) {
    if (q == 0) return;
    for (ZMat* mp : {&a, &v}) {
      ZMat& m = *mp;
      for (int i = 0; i < m.rows; i++) m.at(i, jdst) -= q * m.at(i, jsrc);
    }
  };
  auto col_negate = [&](int j) {
    for (ZMat* mp : {&a, &v}) {
      ZMat& m = *mp;
      for (int i = 0; i < m.rows; i++) m.at(i, j) = -m.at(i, j);
    }
  };
  auto col_swap = [&](int j1, int j2) {
    for (ZMat* mp : {&a, &v}) {
      ZMat& m = *mp;
      for (int i = 0; i < m.rows; i++) std::swap(m.at(i, j1), m.at(i, j2));
    }
  };

  int next = 0;
  for (int i = 0; i < rows && next < cols; i++) {
    int first = -1;
    for (int j = next; j < cols; j++)
      if (a.at(i, j) != 0) {
        if (first < 0 || abs(a.at(i, j)) < abs(a.at(i, first))) first = j;
      }
    if (first < 0) continue;
    if (first != next) col_swap(next, first);
    for (int j = next + 1; j < cols; j++) {
      if (a.at(i, j) == 0) continue;
      mpz_class p = a.at(i, next), q = a.at(i, j), g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      colop_combine(next, j, x, y, p / g, q / g);
    }
    if (a.at(i, next) < 0) col_negate(next);
    // keep earlier pivot columns reduced at this row
    for (int j = 0; j < next; j++) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, j).get_mpz_t(), a.at(i, next).get_mpz_t());
      colop_addmul(j, next, q);
    }
    next++;
  }
  return next;
}

}  // namespace

ZMat kernel_z_saturated(const ZMat& m) {
  ZMat a = m;
  ZMat v = ZMat::identity(ZZ{}, m.cols);
  int r = hnf_cols_with_transform(a, v);
  ZMat ker(ZZ{}, m.cols, m.cols - r);
  for (int j = r; j < m.cols; j++)
    for (int i = 0; i < m.cols; i++) ker.at(i, j - r) = v.at(i, j);
  return ker;
}

std::vector<mpz_class> snf_diagonal(ZMat m) {
  std::vector<mpz_class> diag;
  int top = 0;
  while (top < m.rows && top < m.cols) {
    // find smallest nonzero entry
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = top; i < m.rows; i++)
      for (int j = top; j < m.cols; j++)
        if (m.at(i, j) != 0) {
          mpz_class av = abs(m.at(i, j));
          if (pi < 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    for (int j = 0; j < m.cols; j++) std::swap(m.at(top, j), m.at(pi, j));
    for (int i = 0; i < m.rows; i++) std::swap(m.at(i, top), m.at(i, pj));
    bool clean = true;
    for (int i = top + 1; i < m.rows; i++) {
      mpz_class q = m.at(i, top) / m.at(top, top);
      for (int j = top; j < m.cols; j++) m.at(i, j) -= q * m.at(top, j);
      if (m.at(i, top) != 0) clean = false;
    }
    for (int j = top + 1; j < m.cols; j++) {
      mpz_class q = m.at(top, j) / m.at(top, top);
      for (int i = top; i < m.rows; i++) m.at(i, j) -= q * m.at(i, top);
      if (m.at(top, j) != 0) clean = false;
    }
    if (!clean) continue;  // euclidean size strictly dropped; iterate
    // divisibility fixup: fold any entry not divisible by the pivot
    bool fixed = false;
    for (int i = top + 1; i < m.rows && !fixed; i++)
      for (int j = top + 1; j < m.cols && !fixed; j++)
        if (m.at(i, j) % m.at(top, top) != 0) {
          for (int jj = top; jj < m.cols; jj++) m.at(top, jj) += m.at(i, jj);
          fixed = true;
        }
    if (fixed) continue;
    diag.push_back(abs(m.at(top, top)));
    top++;
  }
  return diag;
}

ZMat saturate_lattice(const ZMat& b) {
  if (b.cols == 0) return b;
  ZMat c = kernel_z_saturated(b.transpose());
  return kernel_z_saturated(c.transpose());
}

ZMat primitive_columns(ZMat b) {
  for (int j = 0; j < b.cols; j++) {
    mpz_class g = 0;
    for (int i = 0; i < b.rows; i++) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.at(i, j).get_mpz_t());
    if (g > 1)
      for (int i = 0; i < b.rows; i++) mpz_divexact(b.at(i, j).get_mpz_t(), b.at(i, j).get_mpz_t(), g.get_mpz_t());
  }
  return b;
}

std::optional<std::vector<mpz_class>> solve_z(const ZMat& a, const std::vector<mpz_class>& b) {
  ZMat h = a;
  ZMat v = ZMat::identity(ZZ{}, a.cols);
  int r = hnf_cols_with_transform(h, v);
  // forward substitution through the column echelon form
  std::vector<mpz_class> y(r, 0);
  std::vector<mpz_class> resid = b;
  for (int j = 0; j < r; j++) {
    int pivot_row = -1;
    for (int i = 0; i < h.rows; i++)
      if (h.at(i, j) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) return std::nullopt;
    if (!mpz_divisible_p(resid[pivot_row].get_mpz_t(), h.at(pivot_row, j).get_mpz_t())) return std::nullopt;
    y[j] = resid[pivot_row] / h.at(pivot_row, j);
    for (int i = 0; i < h.rows; i++) resid[i] -= y[j] * h.at(i, j);
  }
  for (const auto& x : resid)
    if (x != 0) return std::nullopt;
  std::vector<mpz_class> sol(a.cols, 0);
  for (int i = 0; i < a.cols; i++) {
    mpz_class s = 0;
    for (int j = 0; j < r; j++) s += v.at(i, j) * y[j];
    sol[i] = s;
  }
  return sol;
}

QSubspace kernel(const QMat& m) {
  ZMat z = qmat_to_zmat_rowscaled(m);
  return {zmat_to_qmat(kernel_z_rational(z))};
}

ZSubspace kernel(const ZMat& m) { return {kernel_z_saturated(m)}; }

FSubspace kernel(const FMat& m) { return {kernel_field(m)}; }

int rank(const QMat& m) { return rank_z(qmat_to_zmat_rowscaled(m)); }
int rank(const ZMat& m) { return rank_z(m); }
int rank(const FMat& m) { return rank_field(m); }

FSubspace reduce_mod(const ZSubspace& s, i64 ell) {
  Fp f(ell);
  if (s.dim() == 0) return {FMat(f, s.ambient(), 0)};
  ZMat sat = saturate_lattice(primitive_columns(s.basis));
  FMat red = zmat_mod(sat, f);
  if (rank_field(red) != sat.cols) throw std::runtime_error("reduce_mod: rank loss after saturation");
  return {red};
}

FSubspace reduce_mod(const QSubspace& s, i64 ell) {
  ZMat z(ZZ{}, s.ambient(), s.dim());
  for (int j = 0; j < s.dim(); j++) {
    mpz_class den = 1;
    for (int i = 0; i < s.ambient(); i++)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.basis.at(i, j).get_den().get_mpz_t());
    for (int i = 0; i < s.ambient(); i++) z.at(i, j) = mpz_class(s.basis.at(i, j) * Rat(den));
  }
  return reduce_mod(ZSubspace{z}, ell);
}

}  // namespace ppoly
