#ifndef FC_SIEGEL_HPP
#define FC_SIEGEL_HPP

// Degree 2 Siegel cusp forms of Saito-Kurokawa type: Fourier
// coefficients through the Maass relation, Fourier-Jacobi slices, the
// half-integral weight series h_p extracted from the index p slice,
// Bessel periods over class groups and their inversion.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fc/classgroup.hpp"
#include "fc/halfint.hpp"

namespace fc {

// Half-integral symmetric matrix S = [[a, b/2], [b/2, c]].
struct Lambda2Matrix {
  int64_t a = 0, b = 0, c = 0;

  int64_t disc() const { return b * b - 4 * a * c; }
  int64_t content() const;
  bool valid() const { return a > 0 && disc() < 0; }
  bool is_fundamental_mat() const;
  Lambda2Matrix scaled(int64_t t) const { return {t * a, t * b, t * c}; }
  // A^T S A for A = [[x, z], [y, w]] with det 1.
  Lambda2Matrix transform(int64_t x, int64_t y, int64_t z, int64_t w) const;
};

struct SKLift {
  int k = 0;            // Siegel weight, 10 or 12
  HalfIntForm source;   // the plus space form of weight k - 1/2
  std::string glabel;   // eigenform of weight 2k - 2
};

// Built-in lifts: k = 10 from f19/2, k = 12 from f23/2, with source
// coefficients available up to |disc| <= max_disc.
SKLift sk_lift(int k, int64_t max_disc, int threads = 1);

// a(F, S) = sum over e | content(S) of e^{k-1} a_source(|disc S| / e^2).
mpq_class sk_coefficient(const SKLift& F, const Lambda2Matrix& S);

// a(U(p) F, S) = a(F, pS).
mpq_class u_p(const SKLift& F, int64_t p, const Lambda2Matrix& S);

// Index m Fourier-Jacobi slice: all (n, r) with n <= X and
// 0 < 4nm - r^2 <= X.
std::map<std::pair<int64_t, int64_t>, mpq_class> fourier_jacobi(
    const SKLift& F, int64_t m, int64_t X);

// The series h_p: a(m) = sum over mu in [0, 2p) with mu^2 ≡ -m (4p)
// of a(F, [[(m + mu^2)/4p, mu/2], [mu/2, p]]), for m <= X. Tagged with
// weight k - 1/2 and level 4p.
HalfIntForm h_p_construct(const SKLift& F, int64_t p, int64_t X);

// B(F, Lambda) = sum over classes S of a(F, S) Lambda(S).
std::complex<double> bessel_period(const SKLift& F, const ClassGroup& G,
                                   const Character& chi);

// For lifts the coefficient is constant on classes of a fundamental
// discriminant, so orthogonality gives B = 0 exactly for nontrivial
// characters; this certifies that algebraically.
bool bessel_vanishes_exactly(const SKLift& F, const ClassGroup& G,
                             const Character& chi);

// B(F, 1_K) = h(d) * a_source(|d|), exact.
mpq_class bessel_trivial_exact(const SKLift& F, const ClassGroup& G);

// Finite Fourier inversion (1/h) sum over Lambda of B(F,Lambda)
// Lambda^{-1}(S), carried out exactly through character orthogonality;
// returns the per-class coefficients.
std::vector<mpq_class> bessel_invert_exact(const SKLift& F,
                                           const ClassGroup& G);

// |B(F, Lambda)|^2 <= C_F |d|^{k-1} L_value. Reporting utility.
bool hypothesis_g_check(const SKLift& F, const ClassGroup& G,
                        const Character& chi, double L_value, double C_F);

}  // namespace fc

#endif
