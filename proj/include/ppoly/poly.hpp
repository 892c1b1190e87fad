#ifndef PPOLY_POLY_HPP
#define PPOLY_POLY_HPP

#include "ppoly/coset.hpp"
#include "ppoly/matrix.hpp"

namespace ppoly {

// Polynomials of degree <= w are coefficient vectors c_0..c_w (ascending).

// Matrix of the weight -w action P |-> P(gX) (cX+d)^w on V_w; column j
// holds the coefficients of (aX+b)^j (cX+d)^{w-j}.  Valid for any integer
// matrix with nonzero determinant.
template <class D>
DMat<D> slash_matrix(const D& dom, const Mat22& g, int w) {
  if (g.det() == 0) throw std::domain_error("slash_matrix: determinant must be nonzero");
  DMat<D> m(dom, w + 1, w + 1);
  using Elem = typename D::Elem;
  const Elem a = dom.from_int(g.a), b = dom.from_int(g.b), c = dom.from_int(g.c), d = dom.from_int(g.d);
  // top[j] = (aX+b)^j, bottom[j] = (cX+d)^j as coefficient vectors
  std::vector<std::vector<Elem>> top(w + 1), bot(w + 1);
  top[0] = {dom.one()};
  bot[0] = {dom.one()};
  for (int j = 1; j <= w; j++) {
    top[j].assign(j + 1, dom.zero());
    bot[j].assign(j + 1, dom.zero());
    for (int i = 0; i < j; i++) {
      top[j][i] = dom.add(top[j][i], dom.mul(b, top[j - 1][i]));
      top[j][i + 1] = dom.add(top[j][i + 1], dom.mul(a, top[j - 1][i]));
      bot[j][i] = dom.add(bot[j][i], dom.mul(d, bot[j - 1][i]));
      bot[j][i + 1] = dom.add(bot[j][i + 1], dom.mul(c, bot[j - 1][i]));
    }
  }
  for (int j = 0; j <= w; j++) {
    for (int s = 0; s <= j; s++)
      for (int t = 0; t <= w - j; t++) m.at(s + t, j) = dom.add(m.at(s + t, j), dom.mul(top[j][s], bot[w - j][t]));
  }
  return m;
}

template <class D>
std::vector<typename D::Elem> slash(const D& dom, const std::vector<typename D::Elem>& p, const Mat22& g, int w) {
  if (static_cast<int>(p.size()) != w + 1) throw std::domain_error("slash: coefficient count must be w+1");
  return slash_matrix(dom, g, w).apply(p);
}

// Extended polynomial over Q: coefficients for degrees -1, 0, ..., w, w+1.
// Only the operations needed for the odd Eisenstein classes are provided:
// addition, scaling, and the action of diag(d, 1).
struct ExtPoly {
  int w = 0;
  std::vector<Rat> coeff;  // size w+3, index i holds the degree i-1 term

  explicit ExtPoly(int w_) : w(w_), coeff(w_ + 3, Rat(0)) {}

  Rat& deg(int j) { return coeff[j + 1]; }
  const Rat& deg(int j) const { return coeff[j + 1]; }

  ExtPoly operator+(const ExtPoly& o) const {
    if (w != o.w) throw std::domain_error("ExtPoly: weight mismatch");
    ExtPoly r(w);
    for (size_t i = 0; i < coeff.size(); i++) r.coeff[i] = coeff[i] + o.coeff[i];
    return r;
  }
  ExtPoly scaled(const Rat& c) const {
    ExtPoly r(w);
    for (size_t i = 0; i < coeff.size(); i++) r.coeff[i] = coeff[i] * c;
    return r;
  }
  // weight -w action of diag(d,1): X^j -> d^j X^j (degree -1 picks up 1/d)
  ExtPoly slash_diag(i64 d) const {
    if (d == 0) throw std::domain_error("ExtPoly::slash_diag: d must be nonzero");
    ExtPoly r(w);
    Rat dj = make_rat(1, d);
    for (int j = -1; j <= w + 1; j++) {
      r.deg(j) = deg(j) * dj;
      dj *= d;
    }
    return r;
  }
  bool operator==(const ExtPoly& o) const { return w == o.w && coeff == o.coeff; }
};

}  // namespace ppoly

#endif
