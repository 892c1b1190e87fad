#ifndef PPOLY_CONGRUENCE_HPP
#define PPOLY_CONGRUENCE_HPP

#include "ppoly/eisenstein.hpp"

namespace ppoly {

// Specification of a (p-)new subspace of W_w(N), optionally cut down by a
// delta parity and by Atkin-Lehner signs at exact prime divisors of N.
struct NewSpaceSpec {
  i64 N = 1;
  int w = 2;
  i64 p = 1;  // prime dividing N
  std::optional<int> parity;
  std::map<i64, int> al_signs;

  void validate() const;
};

QSubspace new_subspace_q(const NewSpaceSpec& spec);
FSubspace new_subspace_f(const NewSpaceSpec& spec, i64 ell);

// Classical dimension formulas for Gamma_0(N), square-free N, k even >= 4.
struct DimRecord {
  long dim_m = 0;      // modular forms
  long dim_s = 0;      // cusp forms
  long dim_s_new = 0;  // new cusp forms
};
DimRecord dim_oracle(i64 N, unsigned k);

// Dimension comparison of the p-new space over Q and over F_ell.
struct T2Report {
  int dim_q = 0;
  int dim_f = 0;
  int anomaly = 0;
  bool surjective = false;
};
T2Report verify_t2(i64 N, i64 p, int w, i64 ell);

// Characteristic-polynomial root test: for each n, whether the charpoly of
// the n-th Hecke operator restricted to the space has the target as a root
// mod ell.
struct RootCheck {
  i64 n = 0;
  i64 target = 0;  // reduced mod ell
  bool pass = false;
  std::vector<i64> charpoly_mod_ell;
};
std::vector<RootCheck> eigensystem_roots(const QSubspace& space, i64 N, int w, const std::vector<i64>& n_list,
                                         i64 ell, const std::map<i64, Rat>& targets);

struct CheckResult {
  std::string name;
  bool pass = false;
  bool asserted = true;  // informational rows are reported but not required
  std::string witness;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.asserted && !c.pass) return false;
    return true;
  }
};

Report verify_t1(unsigned k, i64 p, int eps, i64 ell);

// Hecke and Atkin-Lehner eigendata of a newform with rational eigenvalues,
// read off the even period polynomial space of level M and weight k.
struct EigenData {
  i64 M = 1;
  unsigned k = 4;
  std::map<i64, Rat> lambda;    // n -> T_n eigenvalue, small n
  std::map<i64, int> al_signs;  // Q -> +-1 for primes Q | M
  mpz_class den_p_plus = 1;
  QVectorPoly p_plus;  // even period polynomial, constant term 1 at identity

  EigenData() : p_plus(QQ{}, 1, 2) {}
};
EigenData rational_newform_eigendata(i64 M, unsigned k, i64 n_sel, const Rat& lambda_sel);

Report verify_t3(i64 M, i64 p, unsigned k, int eps, i64 ell, const EigenData& g);

// Eigenvalue of g_p^{(eps)} at p^m next to the p-new newform value
// (-eps p^{k/2-1})^m; the difference is divisible by
// lambda_p + eps p^{k/2-1}(p+1).
std::pair<mpz_class, mpz_class> al_power_coeffs(const mpz_class& lambda_p, i64 p, int eps, unsigned k, unsigned m);

struct ScanRow {
  unsigned k = 0;
  i64 p = 0;
  int eps = 0;
  i64 ell = 0;
  bool even_route = false;
  std::optional<bool> verified;
};
std::vector<ScanRow> scan_t1(unsigned k_min, unsigned k_max, i64 p_min, i64 p_max, bool run_verify);

}  // namespace ppoly

#endif
