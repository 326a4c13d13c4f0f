#include "fc/jacobi.hpp"

#include <stdexcept>
#include <string>

#include "fc/cache.hpp"
#include "fc/cohen.hpp"
#include "fc/parallel.hpp"
#include "fc/qexp.hpp"

namespace fc {

static const mpz_class kZero(0);

const mpz_class& JacobiForm1::coeff(int64_t D) const {
  if (D < 0) return kZero;
  if (D > max_disc())
    throw std::out_of_range("JacobiForm1::coeff: D beyond stored range");
  return C[static_cast<size_t>(D)];
}

const mpz_class& JacobiForm1::coeff_nr(int64_t n, int64_t r) const {
  return coeff(4 * n - r * r);
}

JacobiForm1 eisenstein_jacobi(int k, int64_t Dmax, int threads) {
  if (k != 4 && k != 6)
    throw std::invalid_argument("eisenstein_jacobi: k must be 4 or 6");
  JacobiForm1 f;
  f.weight = k;
  std::string name = "ej" + std::to_string(k) + "_" + std::to_string(Dmax);
  if (cache_load(name, f.C) &&
      f.C.size() == static_cast<size_t>(Dmax) + 1)
    return f;
  auto T = cohen_tables_35(Dmax, threads);
  const auto& H = (k == 4) ? T.h3 : T.h5;
  // H(k-1, 0) is -1/252 for k = 4 and -1/132 for k = 6.
  long denom = (k == 4) ? -252 : -132;
  f.C.assign(static_cast<size_t>(Dmax) + 1, 0);
  for (int64_t D = 0; D <= Dmax; ++D) {
    mpq_class v = H[static_cast<size_t>(D)] * denom;
    if (v.get_den() != 1)
      throw std::logic_error("eisenstein_jacobi: non-integral coefficient");
    f.C[static_cast<size_t>(D)] = v.get_num();
  }
  cache_store(name, f.C);
  return f;
}

// Multiply the coefficient table of an index 1 form by a level 1 form
// with coefficients e: C'(D) = sum_j e[j] C(D - 4j).
static std::vector<mpz_class> convolve_level1(const std::vector<mpz_class>& C,
                                              const std::vector<mpz_class>& e,
                                              int64_t Dmax, int threads) {
  std::vector<mpz_class> out(static_cast<size_t>(Dmax) + 1, 0);
  parallel_blocks(Dmax + 1, threads, [&](int64_t lo, int64_t hi) {
    for (int64_t D = lo; D < hi; ++D) {
      int64_t rm = D % 4;
      if (rm == 1 || rm == 2) continue;  // support is D ≡ 0, 3 (mod 4)
      mpz_class acc(0);
      for (int64_t j = 0; 4 * j <= D; ++j) {
        const mpz_class& c = C[static_cast<size_t>(D - 4 * j)];
        if (c == 0) continue;
        mpz_addmul(acc.get_mpz_t(), e[static_cast<size_t>(j)].get_mpz_t(),
                   c.get_mpz_t());
      }
      out[static_cast<size_t>(D)] = acc;
    }
  });
  return out;
}

JacobiForm1 jacobi_cusp_index1(int k, int64_t Dmax, int threads) {
  if (k != 10 && k != 12)
    throw std::invalid_argument("jacobi_cusp_index1: k must be 10 or 12");
  JacobiForm1 f;
  f.weight = k;
  std::string name = "jc" + std::to_string(k) + "_" + std::to_string(Dmax);
  if (cache_load(name, f.C) &&
      f.C.size() == static_cast<size_t>(Dmax) + 1)
    return f;

  auto e41 = eisenstein_jacobi(4, Dmax, threads);
  auto e61 = eisenstein_jacobi(6, Dmax, threads);
  int64_t nmax = Dmax / 4;
  auto eA = eisenstein_coeffs(k - 4, nmax);  // pairs with the weight 4 series
  auto eB = eisenstein_coeffs(k - 6, nmax);  // pairs with the weight 6 series
  auto A = convolve_level1(e41.C, eA, Dmax, threads);
  auto B = convolve_level1(e61.C, eB, Dmax, threads);
  f.C.assign(static_cast<size_t>(Dmax) + 1, 0);
  for (int64_t D = 0; D <= Dmax; ++D)
    f.C[static_cast<size_t>(D)] =
        A[static_cast<size_t>(D)] - B[static_cast<size_t>(D)];

  // Normalize: divide by the content, fix the sign with C(3) > 0.
  mpz_class g(0);
  for (const auto& c : f.C) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw std::logic_error("jacobi_cusp_index1: zero form");
  for (auto& c : f.C) c /= g;
  if (Dmax >= 3 && f.C[3] < 0)
    for (auto& c : f.C) c = -c;
  cache_store(name, f.C);
  return f;
}

}  // namespace fc
