#ifndef FC_LFUN_HPP
#define FC_LFUN_HPP

// L-functions: Hecke eigenvalues of the level 1 eigenforms of weight
// 18 and 22, Dirichlet L(1, chi_d) with the class number round trip,
// central values of quadratic twists via the approximate functional
// equation, the Waldspurger-type coefficient ratio test, and the
// symmetric square value at 1.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fc/halfint.hpp"

namespace fc {

struct Eigenform {
  std::string label;  // "g18" or "g22"
  int weight = 0;     // 18 or 22
  int halfk = 0;      // weight / 2; the gamma factor is Gamma(s + halfk)
  int64_t max_n = 0;
  std::vector<double> lam;  // lam[n] = a(n) / n^{(weight-1)/2}, n <= max_n

  double lambda(int64_t n) const;
};

// Build an eigenform with lambda(n) for n <= X. The exact integer a(p)
// are computed by convolution and cached; higher prime powers come
// from the Hecke recursion, composites from multiplicativity.
Eigenform eigenform(const std::string& label, int64_t X, int threads = 1);

// Exact a(p) for all primes p <= X, in prime order.
std::vector<mpz_class> eigenform_ap(const std::string& label, int64_t X,
                                    int threads = 1);

// L(1, chi_d) for a fundamental discriminant d < 0, from the exact
// finite character sum.
double dirichlet_L1(int64_t d);

// Class number recovered from L(1, chi_d) by the class number formula.
int64_t class_number_from_L1(int64_t d);

// Cutoff weight W(xi) in the approximate functional equation, for the
// 2-adic multiplier chi2 = chi_d(2) in {-1, 0, +1}. Closed form via
// the regularized incomplete gamma.
double afe_weight(const Eigenform& g, int chi2, double xi);

// Same weight by numerical contour integration on Re s = c; used to
// validate the closed form.
double afe_weight_contour(const Eigenform& g, int chi2, double xi, double c);

struct LValue {
  double value = 0;
  double est_error = 0;
  std::string method;
};

// L(1/2, g x chi_d) for fundamental d < 0 with d ≡ 1 (mod 4):
// 2 * sum over odd m of lambda(m) chi_d(m) / sqrt(m) * W(m/|d|).
LValue central_value_twist(const Eigenform& g, int64_t d);

// Waldspurger consistency: |c(n1)|^2 L(1/2, g x chi_{d2}) versus
// |c(n2)|^2 L(1/2, g x chi_{d1}) for d_i = -n_i; returns |ratio - 1|.
double waldspurger_pair_deviation(const HalfIntForm& f, const Eigenform& g,
                                  int64_t n1, int64_t n2);

// L(1, Sym^2 g) by the Euler product over p <= P0.
LValue sym2_L_at_1(const Eigenform& g, int64_t P0 = 100000);

// Cross-check by the exponentially smoothed Dirichlet series.
double sym2_L_at_1_series(const Eigenform& g, double Y);

}  // namespace fc

#endif
