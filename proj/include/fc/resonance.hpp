#ifndef FC_RESONANCE_HPP
#define FC_RESONANCE_HPP

// The resonance apparatus: resonator coefficients r(m) supported on a
// prime window, the quadratic discriminant family D_{N,eta}, the Euler
// product G(2s+1; u), the twisted first moment of central values
// (direct sum versus main term formula), and an empirical report for
// the four resonator estimates.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fc/lfun.hpp"

namespace fc {

struct ResonatorParams {
  double X = 0;
  int64_t N = 1;
  double M = 0;   // X^{1/24} unless overridden
  double L = 0;   // (1/8) sqrt(log M log log M) unless overridden
  const Eigenform* lam0 = nullptr;
  std::vector<int64_t> window;  // primes in [L^2, L^4] not dividing N

  double r(int64_t p) const;    // L / (sqrt(p) log p) on the window, else 0
  double r_of(int64_t m) const; // multiplicative, squarefree support
};

// The paper-scale parameters; L_override and M_override are
// demonstration knobs (desk-scale X makes the honest M tiny).
ResonatorParams resonator_params(double X, const Eigenform& lam0,
                                 int64_t N = 1, double L_override = -1,
                                 double M_override = -1);

// R(d) = sum over m <= M of r(m) lambda0(m) chi_d(m).
double resonator_value(const ResonatorParams& P, int64_t d);

// Product over the window of (1 + r(p)^2 lambda0(p)^2).
double calR(const ResonatorParams& P);

struct FamilyD {
  int64_t N = 1;
  int64_t eta = 1;  // reduced residue mod 4N, eta ≡ 1 (mod 4)
  // members are d = -n with n odd squarefree, (n, N) = 1, d ≡ eta (4N)
};

bool family_contains(const FamilyD& fam, int64_t d);
// Members with |d| in [lo, hi], ascending |d|.
std::vector<int64_t> family_members(const FamilyD& fam, double lo, double hi);

// Smooth bump supported on [1, 2], identically 1 on [11/10, 19/10].
double smooth_bump(double t);
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-10);

// One local factor of G(2s+1; u) at p. The four cases: p | 2N uses the
// inverse symmetric square factor, p | u1 and p | u2 have elementary
// factors, and the generic case carries the Satake parameters of g.
double euler_G_local(double s, int64_t p, int64_t u, const Eigenform& g,
                     int64_t N);

// G(2s+1; u) truncated at p <= P0 (clamped to g.max_n).
double euler_G(double s, int64_t u, const Eigenform& g, int64_t N = 1,
               int64_t P0 = 100000);

// L_{g,eta}(1/2) for N = 1: the 2-power Dirichlet series averaged over
// the family, which keeps only even powers of 2.
double ds1_central(const Eigenform& g);

struct MomentResult {
  double value = 0;
  double est_error = 0;
  int64_t terms = 0;
};

// sum over d in D with Phi(|d|/X) != 0 of L(1/2, g x chi_d) chi_d(u)
// Phi(|d|/X), by direct evaluation of each central value.
MomentResult twisted_moment_lhs(const Eigenform& g, int64_t u, double X,
                                const std::function<double(double)>& Phi,
                                int threads = 1, int64_t N = 1,
                                int64_t eta = 1);

// X lambda_g(u1) / (2N sqrt(u1)) * int Phi * L_{g,eta}(1/2)
// * L(1, Sym^2 g) * G(1; u).
double twisted_moment_main(const Eigenform& g, int64_t u, double X,
                           const std::function<double(double)>& Phi,
                           int64_t N = 1);

struct EstimatesReport {
  double X = 0;
  double calR_value = 1;
  double sum_L_R2 = 0;  // sum of L(1/2, g0 x chi_d) |R(d)|^2
  double sum_R2 = 0;
  double sum_R6 = 0;
  double comp_lower = 0;  // X * calR * exp(L / (2 log L))
  double comp_R2 = 0;     // (2X / pi^2) * calR
  double comp_R6 = 0;     // X * exp(log X / log log X)
  std::string csv() const;
};

// Direct sums over D(X) = members with |d| in [X, 2X], with the
// comparator shapes alongside. Reporting, not proof.
EstimatesReport estimates_report(const ResonatorParams& P,
                                 const Eigenform& g0, int threads = 1);

}  // namespace fc

#endif
