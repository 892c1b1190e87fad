#include "ppoly/congruence.hpp"

#include <sstream>

namespace ppoly {

void NewSpaceSpec::validate() const {
  if (!is_prime(p) || N % p != 0) throw std::domain_error("NewSpaceSpec: p must be a prime dividing N");
  if (w < 2 || w % 2) throw std::domain_error("NewSpaceSpec: w must be even, w >= 2");
  if (parity && *parity != 1 && *parity != -1) throw std::domain_error("NewSpaceSpec: parity must be +-1");
  for (const auto& [q, s] : al_signs) {
    if (N % q != 0 || gcd_i64(q, N / q) != 1) throw std::domain_error("NewSpaceSpec: constrained Q must satisfy Q || N");
    if (s != 1 && s != -1) throw std::domain_error("NewSpaceSpec: signs must be +-1");
  }
}

QSubspace new_subspace_q(const NewSpaceSpec& spec) {
  spec.validate();
  QQ dom;
  const i64 N = spec.N, M = spec.N / spec.p;
  const int w = spec.w;
  QSubspace ws = build_w_q(N, w);
  QMat tr = trace_matrix(dom, N, M, w);
  QMat stack = tr * ws.basis;
  stack = stack.stacked(tr * (atkin_lehner_full_q(N, w, N) * ws.basis));
  if (spec.parity) {
    QMat dw = restrict_operator(delta_act_matrix(dom, N, w), ws);
    for (int i = 0; i < ws.dim(); i++) dw.at(i, i) -= Rat(*spec.parity);
    stack = stack.stacked(dw);
  }
  for (const auto& [q, s] : spec.al_signs) {
    QMat alw = restrict_operator(atkin_lehner_full_q(N, w, q), ws).scaled(Rat(1) / Rat(pow_mpz(mpz_class(q), w / 2)));
    for (int i = 0; i < ws.dim(); i++) alw.at(i, i) -= Rat(s);
    stack = stack.stacked(alw);
  }
  QSubspace coords = kernel(stack);
  return {ws.basis * coords.basis};
}

FSubspace new_subspace_f(const NewSpaceSpec& spec, i64 ell) {
  spec.validate();
  Fp dom(ell);
  const i64 N = spec.N, M = spec.N / spec.p;
  const int w = spec.w;
  FSubspace ws = build_w_f(N, w, ell);
  FMat tr = trace_matrix(dom, N, M, w);
  FMat stack = tr * ws.basis;
  stack = stack.stacked(tr * (atkin_lehner_full_f(N, w, N, ell) * ws.basis));
  if (spec.parity) {
    FMat dw = restrict_operator(delta_act_matrix(dom, N, w), ws);
    for (int i = 0; i < ws.dim(); i++) dw.at(i, i) = dom.sub(dw.at(i, i), dom.from_int(*spec.parity));
    stack = stack.stacked(dw);
  }
  for (const auto& [q, s] : spec.al_signs) {
    if (q % ell == 0) throw std::domain_error("new_subspace: Q^{w/2} not invertible mod ell");
    FMat alw = restrict_operator(atkin_lehner_full_f(N, w, q, ell), ws)
                   .scaled(dom.inv(dom_pow(dom, dom.from_int(q), w / 2)));
    for (int i = 0; i < ws.dim(); i++) alw.at(i, i) = dom.sub(alw.at(i, i), dom.from_int(s));
    stack = stack.stacked(alw);
  }
  FSubspace coords = kernel(stack);
  return {ws.basis * coords.basis};
}

namespace {

int legendre_sym(i64 a, i64 p) {  // odd prime p
  i64 r = powmod(mod_pos(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

}  // namespace

DimRecord dim_oracle(i64 N, unsigned k) {
  if (!is_squarefree(N)) throw std::domain_error("dim_oracle: N must be square-free");
  if (k < 4 || k % 2) throw std::domain_error("dim_oracle: k must be even, k >= 4");
  auto base_dims = [&](i64 level) -> std::pair<long, long> {
    i64 mu = psi_index(level);
    i64 nu2 = 1, nu3 = 1, eps_inf = 0;
    for (i64 p : prime_factors(level)) {
      nu2 *= (p == 2) ? 1 : 1 + legendre_sym(-1, p);
      nu3 *= (p == 3) ? 1 : 1 + legendre_sym(-3, p);
    }
    if (level % 4 == 0) nu2 = 0;
    if (level % 9 == 0) nu3 = 0;
    for (i64 d : divisors(level)) {
      i64 g = gcd_i64(d, level / d), phi = 0;
      for (i64 u = 1; u <= g; u++)
        if (gcd_i64(u, g) == 1) phi++;
      eps_inf += phi;
    }
    // genus from the signature, then the standard weight-k dimension
    Rat genus = Rat(1) + Rat(mu) / 12 - Rat(nu2) / 4 - Rat(nu3) / 3 - Rat(eps_inf) / 2;
    long g = static_cast<long>(mpz_class(genus.get_num() / genus.get_den()).get_si());
    long dim_s = (k - 1) * (g - 1) + (k / 4) * nu2 + (k / 3) * nu3 + (k / 2 - 1) * eps_inf;
    long dim_m = dim_s + eps_inf;
    return {dim_m, dim_s};
  };
  DimRecord rec;
  auto [dm, ds] = base_dims(N);
  rec.dim_m = dm;
  rec.dim_s = ds;
  for (i64 d : divisors(N)) {
    long omega = static_cast<long>(prime_factors(N / d).size());
    long c = 1;  // (-2)^omega
    for (long i = 0; i < omega; i++) c *= -2;
    rec.dim_s_new += c * base_dims(d).second;
  }
  return rec;
}

T2Report verify_t2(i64 N, i64 p, int w, i64 ell) {
  if (!is_prime(p) || N % p != 0 || gcd_i64(p, N / p) != 1)
    throw std::domain_error("verify_t2: need N = pM with p prime to M");
  if (!is_prime(ell) || ell <= w || (3 * N) % ell == 0)
    throw std::domain_error("verify_t2: need a prime ell > w with ell coprime to 3N");
  NewSpaceSpec spec{N, w, p, std::nullopt, {}};
  T2Report rep;
  rep.dim_q = new_subspace_q(spec).dim();
  rep.dim_f = new_subspace_f(spec, ell).dim();
  rep.anomaly = rep.dim_f - rep.dim_q;
  rep.surjective = rep.anomaly == 0;
  return rep;
}

std::vector<RootCheck> eigensystem_roots(const QSubspace& space, i64 N, int w, const std::vector<i64>& n_list,
                                         i64 ell, const std::map<i64, Rat>& targets) {
  Fp f(ell);
  std::vector<RootCheck> out;
  for (i64 n : n_list) {
    RootCheck rc;
    rc.n = n;
    rc.target = f.from_mpq(targets.at(n));
    QMat c = restrict_operator(hecke_full_q(N, w, n), space);
    auto cp = charpoly_field(c);
    std::vector<i64> cp_mod;
    for (const auto& coeff : cp) {
      if (coeff.get_den() != 1) throw std::runtime_error("eigensystem_roots: charpoly not integral");
      cp_mod.push_back(f.from_mpz(coeff.get_num()));
    }
    // Horner at the target
    i64 val = 0;
    for (auto it = cp_mod.rbegin(); it != cp_mod.rend(); ++it) val = (mulmod(val, rc.target, ell) + *it) % ell;
    rc.pass = (val == 0) && space.dim() > 0;
    rc.charpoly_mod_ell = cp_mod;
    out.push_back(rc);
  }
  return out;
}

Report verify_t1(unsigned k, i64 p, int eps, i64 ell) {
  Report rep;
  const int w = static_cast<int>(k) - 2;
  T1Conditions cond = t1_conditions(k, p, eps, ell);
  {
    std::ostringstream os;
    if (cond.case_even_route)
      os << "ell^" << cond.ell_power << " | p^{k/2}+eps";
    else if (cond.odd_route_witness_n)
      os << "odd route witness n=" << *cond.odd_route_witness_n;
    if (!cond.ok) os << (cond.failure.empty() ? "" : cond.failure);
    rep.checks.push_back({"t1-conditions", cond.ok, true, os.str()});
  }
  if (!cond.ok) return rep;

  EpsSystem es = EpsSystem::for_level(p, {{p, eps}});
  if (cond.case_even_route) {
    // reduction of the even Eisenstein class lies in the new space mod ell
    Fp f(ell);
    FVectorPoly red = eis_plus(f, p, es, w);
    bool nonzero = !red.is_zero();
    rep.checks.push_back({"eis-plus-nonzero-mod-ell", nonzero, true, ""});
    FSubspace newf = new_subspace_f({p, w, p, std::nullopt, {}}, ell);
    bool member = in_span(newf, red.coords);
    std::ostringstream os;
    os << "dim new mod ell = " << newf.dim();
    rep.checks.push_back({"eis-plus-new-membership-mod-ell", member, true, os.str()});
  } else {
    // interior coefficients of the odd class at the identity coset, mod ell
    Fp f(ell);
    bool nonzero = false;
    std::string wit;
    for (unsigned n = 2; n < k && !nonzero; n += 2) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k - 2, n - 1);
      Rat c = Rat(binom) * (bernoulli(n) / static_cast<long>(n)) * (bernoulli(k - n) / static_cast<long>(k - n)) / 2;
      c *= Rat(1) - Rat(pow_mpz(mpz_class(p), n - 1));
      if (f.from_mpq(c) != 0) {
        nonzero = true;
        wit = "n=" + std::to_string(n);
      }
    }
    rep.checks.push_back({"eis-minus-interior-nonzero-mod-ell", nonzero, true, wit});
  }

  std::vector<i64> ns;
  std::map<i64, Rat> targets;
  for (i64 n : {2, 3, 5}) {
    if (n == p) continue;
    ns.push_back(n);
    targets[n] = Rat(sigma(n, k - 1));
  }
  NewSpaceSpec spec{p, w, p, 1, {{p, eps}}};
  QSubspace space = new_subspace_q(spec);
  bool roots_ok = true;
  std::ostringstream os;
  for (const RootCheck& rc : eigensystem_roots(space, p, w, ns, ell, targets)) {
    roots_ok = roots_ok && rc.pass;
    os << "n=" << rc.n << ":" << (rc.pass ? "root" : "no-root") << " ";
  }
  os << "(dim " << space.dim() << ")";
  rep.checks.push_back({"eigensystem-roots-sigma", roots_ok, true, os.str()});
  return rep;
}

EigenData rational_newform_eigendata(i64 M, unsigned k, i64 n_sel, const Rat& lambda_sel) {
  const int w = static_cast<int>(k) - 2;
  QQ dom;
  QSubspace ws = build_w_q(M, w);
  auto [wplus, wminus] = split_pm(dom, M, w, ws);
  QMat c_sel = restrict_operator(hecke_full_q(M, w, n_sel), wplus);
  QSubspace eig = eigenspace(c_sel, lambda_sel);
  if (eig.dim() != 1) throw std::domain_error("rational_newform_eigendata: eigenspace not one-dimensional");
  QMat vec = wplus.basis * eig.basis;  // column vector in V coordinates

  EigenData data;
  data.M = M;
  data.k = k;
  auto ratio_of = [&](const QMat& image) {
    for (int i = 0; i < vec.rows; i++)
      if (vec.at(i, 0) != 0) {
        Rat lam = image.at(i, 0) / vec.at(i, 0);
        for (int j = 0; j < vec.rows; j++)
          if (image.at(j, 0) != vec.at(j, 0) * lam)
            throw std::runtime_error("rational_newform_eigendata: not an eigenvector");
        return lam;
      }
    throw std::runtime_error("rational_newform_eigendata: zero vector");
  };
  for (i64 n : {2, 3, 5}) {
    if (gcd_i64(n, M) != 1) continue;
    data.lambda[n] = ratio_of(hecke_full_q(M, w, n) * vec);
  }
  for (i64 q : prime_factors(M)) {
    Rat lam = ratio_of(atkin_lehner_full_q(M, w, q) * vec) / Rat(pow_mpz(mpz_class(q), w / 2));
    if (lam != 1 && lam != -1) throw std::runtime_error("rational_newform_eigendata: Atkin-Lehner value not +-1");
    data.al_signs[q] = lam == 1 ? 1 : -1;
  }
  // normalize: constant coefficient 1 at the identity coset
  int id_coord = coset_table(M).identity_index() * (w + 1);
  Rat c0 = vec.at(id_coord, 0);
  if (c0 == 0) throw std::runtime_error("rational_newform_eigendata: identity constant term vanishes");
  data.p_plus = QVectorPoly(dom, M, w);
  mpz_class den = 1;
  for (int i = 0; i < vec.rows; i++) {
    data.p_plus.coords[i] = vec.at(i, 0) / c0;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), data.p_plus.coords[i].get_den().get_mpz_t());
  }
  data.den_p_plus = den;
  return data;
}

Report verify_t3(i64 M, i64 p, unsigned k, int eps, i64 ell, const EigenData& g) {
  Report rep;
  if (!is_prime(p) || gcd_i64(p, M) != 1) throw std::domain_error("verify_t3: p must be a prime not dividing M");
  if (!is_prime(ell)) throw std::domain_error("verify_t3: ell must be prime");
  const i64 N = M * p;
  const int w = static_cast<int>(k) - 2;
  {
    bool pre = ell > static_cast<i64>(k) - 2 && (3 * N) % ell != 0 && ell != static_cast<i64>(k) + 1;
    rep.checks.push_back({"preconditions", pre, true, "ell>k-2, ell coprime to 3Mp, ell != k+1"});
    if (!pre) return rep;
  }
  Fp f(ell);
  // lambda_p = -eps p^{k/2-1}(p+1) mod ell
  Rat lhs = g.lambda.at(p) + Rat(eps) * Rat(pow_mpz(mpz_class(p), k / 2 - 1)) * Rat(p + 1);
  bool lam_ok = f.from_mpq(lhs) == 0;
  rep.checks.push_back({"lambda-p-congruence", lam_ok, true, "lambda_p + eps p^{k/2-1}(p+1) = " + rat_to_string(lhs)});
  if (!lam_ok) return rep;

  mpz_class c15 = (pow_mpz(mpz_class(p), k / 2 - 1) + eps) * g.den_p_plus;
  bool c15_ok = !mpz_divisible_ui_p(c15.get_mpz_t(), static_cast<unsigned long>(ell));
  rep.checks.push_back({"denominator-condition", c15_ok, true, "(p^{k/2-1}+eps) den P^+ = " + c15.get_str()});

  std::vector<i64> ns;
  std::map<i64, Rat> targets;
  for (i64 n : {2, 3, 5}) {
    if (gcd_i64(n, N) != 1 || !g.lambda.count(n)) continue;
    ns.push_back(n);
    targets[n] = g.lambda.at(n);
  }
  NewSpaceSpec spec{N, w, p, std::nullopt, {{p, eps}}};
  QSubspace space = new_subspace_q(spec);
  bool roots_ok = true;
  std::ostringstream os;
  for (const RootCheck& rc : eigensystem_roots(space, N, w, ns, ell, targets)) {
    roots_ok = roots_ok && rc.pass;
    os << "n=" << rc.n << ":" << (rc.pass ? "root" : "no-root") << " ";
  }
  os << "(dim " << space.dim() << ")";
  rep.checks.push_back({"eigensystem-roots-lambda", roots_ok, true, os.str()});
  return rep;
}

std::pair<mpz_class, mpz_class> al_power_coeffs(const mpz_class& lambda_p, i64 p, int eps, unsigned k, unsigned m) {
  if (m < 1) throw std::domain_error("al_power_coeffs: m >= 1");
  mpz_class pk1 = pow_mpz(mpz_class(p), k - 1);
  std::vector<mpz_class> lam = {1, lambda_p};
  for (unsigned j = 2; j <= m; j++) lam.push_back(lambda_p * lam[j - 1] - pk1 * lam[j - 2]);
  mpz_class lhs = lam[m] + eps * pow_mpz(mpz_class(p), k / 2) * lam[m - 1];
  mpz_class base = -eps * pow_mpz(mpz_class(p), k / 2 - 1);
  mpz_class rhs = pow_mpz(base, m);
  return {lhs, rhs};
}

std::vector<ScanRow> scan_t1(unsigned k_min, unsigned k_max, i64 p_min, i64 p_max, bool run_verify) {
  std::vector<ScanRow> rows;
  for (unsigned k = k_min + (k_min % 2); k <= k_max; k += 2) {
    if (k < 4) continue;
    for (i64 p = p_min; p <= p_max; p++) {
      if (!is_prime(p)) continue;
      for (int eps : {+1, -1}) {
        mpz_class prod = (pow_mpz(mpz_class(p), k / 2) + eps) * (pow_mpz(mpz_class(p), k / 2 - 1) + eps);
        std::vector<i64> candidates;
        for (const auto& [q, e] : factor(prod)) {
          if (!q.fits_slong_p()) continue;
          i64 ell = q.get_si();
          if (ell > 3 && ell > static_cast<i64>(k) - 2 && ell != p) candidates.push_back(ell);
        }
        for (i64 ell : candidates) {
          T1Conditions cond = t1_conditions(k, p, eps, ell);
          if (!cond.ok) continue;
          ScanRow row{k, p, eps, ell, cond.case_even_route, std::nullopt};
          if (run_verify) row.verified = verify_t1(k, p, eps, ell).all_pass();
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

}  // namespace ppoly
