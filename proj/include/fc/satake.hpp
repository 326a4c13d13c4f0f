#ifndef FC_SATAKE_HPP
#define FC_SATAKE_HPP

// Local Satake data for GSp(4) representations and dihedral theta
// series: power sums for pi, AI(Lambda), std(pi), ad(pi), the square
// identities relating them, the Chandee-type prime power sum, the
// smoothed prime sum P(Lambda; x) with its large deviation counting
// function, brute-force moment bounds over the character family, the
// seeded unit-circle random model, and a Gaussian integral identity.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "fc/classgroup.hpp"
#include "fc/lfun.hpp"

namespace fc {

// Tempered local parameters at one prime: |alpha| = |beta| = 1.
struct SatakeGSp4 {
  std::complex<double> alpha, beta;
};

struct DerivedSatake {
  std::array<std::complex<double>, 5> std_set;
  std::array<std::complex<double>, 10> ad_set;
};

DerivedSatake derived_satake(const SatakeGSp4& s);

// Power sums a_star(p^n) over the parameter multisets. All real: the
// sets are closed under inversion, and the ramified AI value is +-1.
double a_pi(const SatakeGSp4& s, int n);
double a_std(const SatakeGSp4& s, int n);
double a_ad(const SatakeGSp4& s, int n);
double a_ai(const AIParams& a, int n);

// chi_dp below is the Kronecker symbol (d/p) in {-1, 0, 1}; it must
// match the split type carried by the AI data.

// |a_pi(p^2) a_AI(p^2) - (a_ad(p) - a_std(p) - 1)
//  (a_{AI of Lambda^2}(p) + (d/p)^2 - (d/p))|.
double rs_square_identity_check(const SatakeGSp4& s, const AIParams& ai,
                                const AIParams& ai_sq, int chi_dp);

// pi attached to a pair of elliptic eigenforms through the Yoshida
// factorization L(s, pi) = L(s, pi_1) L(s, pi_2): alpha from f1,
// beta from f2, for all primes p <= X.
std::map<int64_t, SatakeGSp4> yoshida_pi(const Eigenform& f1,
                                         const Eigenform& f2, int64_t X);

// sum over p^n <= x, p not dividing N, of
// a_pi(p^n) a_AI(p^n) / (n p^{(n/2)(1 + 1/log x)}), plus
// C0 log|d| / log x.
double chandee_sum(const std::map<int64_t, SatakeGSp4>& pi,
                   const ClassGroup& G, const Character& chi, double x,
                   double C0 = 2, int64_t N = 1);

// P(Lambda; x): smoothed sum over p <= x of
// a_pi(p) a_AI(p) p^{-1/2 - 1/log x} log(x/p)/log x.
double P_Lambda(const std::map<int64_t, SatakeGSp4>& pi, const ClassGroup& G,
                const Character& chi, double x, int64_t N = 1);

// Fraction of characters with P(Lambda; x) > V, by full enumeration.
double A_K(const std::map<int64_t, SatakeGSp4>& pi, const ClassGroup& G,
           double V, double x, int64_t N = 1);

struct MomentBoundResult {
  double lhs = 0, rhs = 0;
  bool ok = false;
};

// (1/h) sum over Lambda of (sum over admissible p <= x of
// b_p a_AI(p) / sqrt p)^{2l} against (2l)!/(2^l l!) times the
// diagonal sum. ramified_case false: p coprime to d, doubled diagonal
// over split p; true: p | d, plain diagonal. Requires x^l < sqrt|d|/2.
MomentBoundResult moment_bound_check(const ClassGroup& G,
                                     const std::map<int64_t, double>& b,
                                     double x, int l, bool ramified_case,
                                     int64_t N = 1);

struct MCStats {
  double mean = 0;
  double variance = 0;
  double predicted_variance = 0;
  std::vector<int64_t> histogram;  // 41 bins over +-5 predicted sigma
};

// Monte Carlo for Z = sum over split p < X of b(p)(U_p + 1/U_p)/sqrt p
// with U_p iid uniform on the unit circle; deterministic in the seed.
MCStats random_model_mc(const std::map<int64_t, double>& b, int64_t d,
                        int64_t X, int64_t samples, uint64_t seed);

// Relative residual of int e^{-t^2/(2 sigma) + t/2} dt against the
// closed form sqrt(2 pi sigma) e^{sigma/8}.
double gaussian_integral_check(double sigma);

// The two Lemma-style sums: the smoothed p^2 sum for pi x AI(Lambda)
// up to sqrt x, and sum of a_pi(p)^2/p over split p <= x; reported
// against -log log x and (1/2) log log x by the caller.
std::pair<double, double> lemma62_sums(const std::map<int64_t, SatakeGSp4>& pi,
                                       const ClassGroup& G,
                                       const Character& chi, double x,
                                       int64_t N = 1);

}  // namespace fc

#endif
