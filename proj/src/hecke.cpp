#include "ppoly/hecke.hpp"

#include <mutex>
#include <set>
#include <sstream>

namespace ppoly {

void FormalMatrixSum::add(const Mat22& m, i64 coeff) {
  if (coeff == 0) return;
  if (m.det() != n) throw std::domain_error("FormalMatrixSum: determinant mismatch");
  Mat22 key = m.sign_normalized();
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

std::vector<Mat22> coset_reps_infty(i64 n) {
  if (n < 1) throw std::domain_error("coset_reps_infty: n must be positive");
  std::vector<Mat22> out;
  for (i64 a : divisors(n)) {
    i64 d = n / a;
    for (i64 b = 0; b < d; b++) out.push_back({a, b, 0, d});
  }
  return out;
}

FormalMatrixSum zagier_element(i64 n) {
  FormalMatrixSum s;
  s.n = n;
  for (i64 a = 1; a <= n; a++)
    for (i64 d = 1; a + d <= n + 1; d++) {
      i64 bc = a * d - n;
      if (bc < 0) continue;
      if (bc == 0) {
        for (i64 c = 0; c < a; c++) s.add({a, 0, c, d}, 1);
        for (i64 b = 1; b < d; b++) s.add({a, b, 0, d}, 1);
      } else {
        for (i64 b = 1; b < d; b++) {
          if (bc % b != 0) continue;
          i64 c = bc / b;
          if (c < a) s.add({a, b, c, d}, 1);
        }
      }
    }
  return s;
}

FormalMatrixSum product(const FormalMatrixSum& x, const FormalMatrixSum& y) {
  FormalMatrixSum r;
  r.n = x.n * y.n;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) r.add(mx.mul(my), cx * cy);
  return r;
}

namespace {

// Canonical representative of the orbit of M under M -> T^k M, M -> -M.
Mat22 t_orbit_key(const Mat22& m_in) {
  auto reduce = [](Mat22 m) -> Mat22 {
    if (m.c != 0) {
      i64 mod = m.c > 0 ? m.c : -m.c;
      i64 a2 = mod_pos(m.a, mod);
      i64 k = (a2 - m.a) / m.c;
      return {a2, m.b + k * m.d, m.c, m.d};
    }
    i64 mod = m.d > 0 ? m.d : -m.d;
    i64 b2 = mod_pos(m.b, mod);
    return {m.a, b2, 0, m.d};
  };
  Mat22 r1 = reduce(m_in), r2 = reduce(m_in.neg());
  return r1 < r2 ? r1 : r2;
}

}  // namespace

CzReport cz_defect(const FormalMatrixSum& tt, i64 n) {
  for (const auto& [m, c] : tt.terms)
    if (m.det() != n) throw std::domain_error("cz_defect: determinant mismatch");
  std::map<Mat22, i64> defect;
  auto add = [&](const Mat22& m, i64 c) {
    Mat22 key = m.sign_normalized();
    defect[key] += c;
  };
  for (const Mat22& m : coset_reps_infty(n)) {
    add(m, 1);
    add(m.mul(MAT_S), -1);
  }
  for (const auto& [m, c] : tt.terms) {
    add(m, -c);
    add(MAT_S.mul(m), c);
  }
  std::map<Mat22, i64> orbit_sum;
  for (const auto& [m, c] : defect) orbit_sum[t_orbit_key(m)] += c;
  for (const auto& [key, sum] : orbit_sum)
    if (sum != 0) return {false, key, sum};
  return {true, std::nullopt, 0};
}

std::optional<FormalMatrixSum> solve_hecke_element(i64 n, i64 bound) {
  // support: sign-normalized determinant-n matrices with bounded entries
  std::vector<Mat22> support;
  for (i64 a = -bound; a <= bound; a++)
    for (i64 b = -bound; b <= bound; b++)
      for (i64 c = -bound; c <= bound; c++)
        for (i64 d = -bound; d <= bound; d++) {
          Mat22 m{a, b, c, d};
          if (m.det() != n) continue;
          if (!(m == m.sign_normalized())) continue;
          support.push_back(m);
        }
  std::sort(support.begin(), support.end());

  // right-hand side: orbit sums of T^infty_n (1 - S)
  std::map<Mat22, i64> rhs;
  for (const Mat22& m : coset_reps_infty(n)) {
    rhs[t_orbit_key(m)] += 1;
    rhs[t_orbit_key(m.mul(MAT_S))] -= 1;
  }
  // unknown columns contribute through (1 - S) * M
  std::map<Mat22, int> orbit_index;
  auto orbit_of = [&](const Mat22& m) {
    Mat22 k = t_orbit_key(m);
    auto it = orbit_index.find(k);
    if (it == orbit_index.end()) it = orbit_index.emplace(k, static_cast<int>(orbit_index.size())).first;
    return it->second;
  };
  std::vector<std::map<int, i64>> colentries(support.size());
  for (size_t j = 0; j < support.size(); j++) {
    colentries[j][orbit_of(support[j])] += 1;
    colentries[j][orbit_of(MAT_S.mul(support[j]))] -= 1;
  }
  std::vector<std::pair<Mat22, i64>> rhs_entries(rhs.begin(), rhs.end());
  for (const auto& [k, v] : rhs_entries) orbit_of(k);

  ZMat a(ZZ{}, static_cast<int>(orbit_index.size()), static_cast<int>(support.size()));
  for (size_t j = 0; j < support.size(); j++)
    for (const auto& [row, v] : colentries[j]) a.at(row, static_cast<int>(j)) = v;
  std::vector<mpz_class> b(orbit_index.size(), 0);
  for (const auto& [k, v] : rhs_entries) b[orbit_of(k)] = v;

  auto sol = solve_z(a, b);
  if (!sol) return std::nullopt;
  FormalMatrixSum out;
  out.n = n;
  for (size_t j = 0; j < support.size(); j++) {
    const mpz_class& c = (*sol)[j];
    if (c != 0) out.add(support[j], c.get_si());
  }
  if (!cz_defect(out, n).ok) return std::nullopt;
  return out;
}

const FormalMatrixSum& hecke_element(i64 n) {
  static std::map<i64, FormalMatrixSum> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  FormalMatrixSum cand = zagier_element(n);
  if (!cz_defect(cand, n).ok) {
    bool found = false;
    // coprime split, if any
    for (i64 m = 2; m * m <= n && !found; m++) {
      if (n % m != 0 || gcd_i64(m, n / m) != 1) continue;
      cand = product(hecke_element(m), hecke_element(n / m));
      found = cz_defect(cand, n).ok;
    }
    for (i64 bound : {n + 1, 2 * n + 2}) {
      if (found) break;
      auto sol = solve_hecke_element(n, bound);
      if (sol) {
        cand = *sol;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("hecke_element: no verified element found for n=" + std::to_string(n));
  }
  return cache.emplace(n, std::move(cand)).first->second;
}

DoubleCosetSpec DoubleCosetSpec::hecke(i64 n, i64 N) {
  if (gcd_i64(n, N) != 1) throw std::domain_error("DoubleCosetSpec: hecke requires gcd(n, N) = 1");
  return {Kind::HeckeCoprime, n, N, 0};
}

DoubleCosetSpec DoubleCosetSpec::atkin_lehner(i64 Q, i64 N) {
  if (Q <= 0 || N % Q != 0 || gcd_i64(Q, N / Q) != 1)
    throw std::domain_error("DoubleCosetSpec: atkin_lehner requires Q || N");
  return {Kind::AtkinLehner, Q, N, Q};
}

std::string DoubleCosetSpec::str() const {
  std::ostringstream os;
  if (kind == Kind::HeckeCoprime)
    os << "T(" << n << ")@" << N;
  else
    os << "W(" << Q << ")@" << N;
  return os.str();
}

bool sigma_contains(const DoubleCosetSpec& spec, const Mat22& y) {
  if (y.det() != spec.n) return false;
  if (spec.kind == DoubleCosetSpec::Kind::HeckeCoprime)
    return mod_pos(y.c, spec.N) == 0 && gcd_i64(y.a, spec.N) == 1;
  Mat22 w = atkin_lehner_mat(spec.Q, spec.N);
  Mat22 z = y.mul(w.adj());  // Q * (y w^{-1})
  if (z.a % spec.Q || z.b % spec.Q || z.c % spec.Q || z.d % spec.Q) return false;
  return mod_pos(z.c / spec.Q, spec.N) == 0;
}

std::optional<int> decompose(const Mat22& m, int label_idx, const DoubleCosetSpec& spec) {
  if (m.det() != spec.n) throw std::domain_error("decompose: determinant mismatch");
  const CosetTable& tbl = coset_table(spec.N);
  Mat22 x = m.mul(tbl.lift(label_idx).inv_det1());
  if (spec.kind == DoubleCosetSpec::Kind::HeckeCoprime) {
    // bottom row (r, s) proportional to (x.c, -x.a), made primitive
    i64 g = gcd_i64(x.a, x.c);
    i64 r = x.c / g, s = -x.a / g;
    auto [gg, p, q] = xgcd_i64(s, r);  // p*s + q*r = 1
    Mat22 gamma{p, -q, r, s};
    if (gamma.det() != 1) throw std::logic_error("decompose: completion failed");
    if (!sigma_contains(spec, gamma.mul(x))) throw std::logic_error("decompose: constructed matrix not in coset");
    return tbl.index_of(gamma.c, gamma.d);
  }
  Mat22 w = atkin_lehner_mat(spec.Q, spec.N);
  Mat22 z = x.mul(w.adj());
  if (z.a % spec.Q || z.b % spec.Q || z.c % spec.Q || z.d % spec.Q) return std::nullopt;
  Mat22 u{z.a / spec.Q, z.b / spec.Q, z.c / spec.Q, z.d / spec.Q};  // u = x w^{-1} in SL_2(Z)
  Mat22 gamma = u.inv_det1();
  if (!sigma_contains(spec, gamma.mul(x))) return std::nullopt;
  return tbl.index_of(gamma.c, gamma.d);
}

void require_eq_star(const DoubleCosetSpec& spec) {
  static std::set<std::string> verified;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = spec.str();
  if (verified.count(key)) return;

  const CosetTable& tbl = coset_table(spec.N);
  std::vector<Mat22> reps;
  if (spec.kind == DoubleCosetSpec::Kind::HeckeCoprime) {
    reps = coset_reps_infty(spec.n);
  } else {
    // infinity-fixing representative of the single coset Gamma_1 w_Q
    Mat22 w = atkin_lehner_mat(spec.Q, spec.N);
    i64 g = gcd_i64(w.a, w.c);
    auto [gg, xx, yy] = xgcd_i64(w.a, w.c);
    Mat22 rot{xx, yy, -w.c / g, w.a / g};
    if (rot.det() != 1) throw std::logic_error("require_eq_star: rotation not unimodular");
    Mat22 up = rot.mul(w);  // upper triangular
    i64 b = mod_pos(up.b, up.d > 0 ? up.d : -up.d);
    reps = {Mat22{up.a, b, 0, up.d}.sign_normalized()};
  }
  for (const Mat22& rep : reps) {
    int count = 0;
    for (int A = 0; A < tbl.size(); A++)
      if (sigma_contains(spec, tbl.lift(A).mul(rep))) count++;
    if (count != 1)
      throw std::runtime_error("double coset " + key + " violates the coset-matching condition (count=" +
                               std::to_string(count) + " for rep " + rep.str() + ")");
  }
  verified.insert(key);
}

namespace {

std::string op_key(i64 N, int w, const std::string& what, i64 extra) {
  return std::to_string(N) + "|" + std::to_string(w) + "|" + what + "|" + std::to_string(extra);
}

}  // namespace

QMat hecke_full_q(i64 N, int w, i64 n) {
  static std::map<std::string, QMat> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = op_key(N, w, "T", n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, sigma_op_matrix(QQ{}, N, w, DoubleCosetSpec::hecke(n, N), hecke_element(n))).first;
  return it->second;
}

FMat hecke_full_f(i64 N, int w, i64 n, i64 ell) {
  return sigma_op_matrix(Fp(ell), N, w, DoubleCosetSpec::hecke(n, N), hecke_element(n));
}

QMat atkin_lehner_full_q(i64 N, int w, i64 Q) {
  static std::map<std::string, QMat> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = op_key(N, w, "W", Q);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, sigma_op_matrix(QQ{}, N, w, DoubleCosetSpec::atkin_lehner(Q, N), hecke_element(Q))).first;
  return it->second;
}

FMat atkin_lehner_full_f(i64 N, int w, i64 Q, i64 ell) {
  return sigma_op_matrix(Fp(ell), N, w, DoubleCosetSpec::atkin_lehner(Q, N), hecke_element(Q));
}

QMat hecke_matrix_q(i64 N, int w, i64 n) {
  static std::map<std::string, QMat> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = op_key(N, w, "Tw", n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, restrict_operator(hecke_full_q(N, w, n), build_w_q(N, w))).first;
  return it->second;
}

FMat hecke_matrix_f(i64 N, int w, i64 n, i64 ell) {
  return restrict_operator(hecke_full_f(N, w, n, ell), build_w_f(N, w, ell));
}

QMat atkin_lehner_matrix_q(i64 N, int w, i64 Q) {
  static std::map<std::string, QMat> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = op_key(N, w, "Ww", Q);
  auto it = cache.find(key);
  if (it == cache.end()) {
    QQ dom;
    QMat r = restrict_operator(atkin_lehner_full_q(N, w, Q), build_w_q(N, w));
    Rat scale = Rat(1) / Rat(pow_mpz(mpz_class(Q), w / 2));
    it = cache.emplace(key, r.scaled(scale)).first;
  }
  return it->second;
}

FMat atkin_lehner_matrix_f(i64 N, int w, i64 Q, i64 ell) {
  Fp f(ell);
  if (Q % ell == 0) throw std::domain_error("atkin_lehner_matrix: Q^{w/2} not invertible mod ell");
  FMat r = restrict_operator(atkin_lehner_full_f(N, w, Q, ell), build_w_f(N, w, ell));
  return r.scaled(f.inv(dom_pow(f, f.from_int(Q), w / 2)));
}

}  // namespace ppoly
