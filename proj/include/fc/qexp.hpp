#ifndef FC_QEXP_HPP
#define FC_QEXP_HPP

// Exact q-expansions with rational coefficients, plus fast integer
// builders for the classical level 1 series we need: divisor sums,
// Eisenstein series, eta powers and the discriminant cusp form.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fc {

struct QExpansion {
  int weight = 0;
  int64_t level = 1;
  std::vector<mpq_class> a;  // a[n] is the coefficient of q^n

  int64_t size() const { return static_cast<int64_t>(a.size()); }
  const mpq_class& coeff(int64_t n) const;

  QExpansion operator+(const QExpansion& o) const;
  QExpansion operator-(const QExpansion& o) const;
  QExpansion operator*(const QExpansion& o) const;  // truncated product
  QExpansion scaled(const mpq_class& s) const;
};

// sigma_j(n) for n = 1..X (index 0 unused, set to 0).
std::vector<mpz_class> sigma_series(int j, int64_t X);

// Coefficients of prod_{n>=1} (1 - q^n)^3 up to q^X (sparse support on
// triangular numbers k(k+1)/2 with value (-1)^k (2k+1)).
std::vector<mpz_class> eta3_coeffs(int64_t X);

// tau(n) for n = 0..X (tau(0) = 0, tau(1) = 1).
std::vector<mpz_class> delta_coeffs(int64_t X);

// Integer coefficients of E_k for k in {4, 6, 8, 10}: 1 + c_k sum sigma_{k-1}.
std::vector<mpz_class> eisenstein_coeffs(int k, int64_t X);

// Rational-coefficient wrappers carrying weight metadata.
QExpansion delta_qexp(int64_t X);
QExpansion eisenstein_qexp(int k, int64_t X);

}  // namespace fc

#endif
