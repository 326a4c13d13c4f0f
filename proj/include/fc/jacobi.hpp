#ifndef FC_JACOBI_HPP
#define FC_JACOBI_HPP

// Jacobi forms of index 1. A form is stored through its coefficient
// function C(D) on discriminants D >= 0 (supported on D ≡ 0, 3 mod 4);
// the Fourier coefficient of q^n zeta^r depends only on 4n - r^2.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fc {

struct JacobiForm1 {
  int weight = 0;
  std::vector<mpz_class> C;  // C[D] for 0 <= D <= max_disc()

  int64_t max_disc() const { return static_cast<int64_t>(C.size()) - 1; }
  const mpz_class& coeff(int64_t D) const;
  // Coefficient of q^n zeta^r, i.e. C(4n - r^2); zero when 4n < r^2.
  const mpz_class& coeff_nr(int64_t n, int64_t r) const;
};

// Eisenstein series of weight k in {4, 6} and index 1, scaled to the
// classical integer normalization C(0) = 1 ... C(D) = H(k-1, D)/H(k-1, 0).
JacobiForm1 eisenstein_jacobi(int k, int64_t Dmax, int threads = 1);

// The cuspidal generator of weight k in {10, 12} and index 1, with
// integral primitive coefficients and C(3) > 0.
JacobiForm1 jacobi_cusp_index1(int k, int64_t Dmax, int threads = 1);

}  // namespace fc

#endif
