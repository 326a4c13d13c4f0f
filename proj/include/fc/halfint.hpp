#ifndef FC_HALFINT_HPP
#define FC_HALFINT_HPP

// Half-integral weight forms in the plus space of level 4. The
// coefficient a(n) is stored as an exact rational times a global
// factor scale * sqrt(sqrt_arg); the latter stays rational under the
// U(r^2) operator so coefficient identities can be checked exactly.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fc/jacobi.hpp"

namespace fc {

struct HalfIntForm {
  int kappa = 0;       // the weight is kappa + 1/2
  int64_t level = 4;   // 4N
  std::vector<mpq_class> a;   // a[n], n >= 0
  mpq_class scale = 1;        // every coefficient carries scale * sqrt(sqrt_arg)
  mpq_class sqrt_arg = 1;
  bool plus_flag = true;      // a(n) = 0 unless (-1)^kappa n ≡ 0, 1 (mod 4)

  int64_t max_index() const { return static_cast<int64_t>(a.size()) - 1; }
  const mpq_class& raw(int64_t n) const;   // a[n] without the global factor
  double coeff(int64_t n) const;           // a(n) as a double
  // Normalized coefficient c(n) = a(n) * n^{1/4 - kappa/2}.
  double c(int64_t n) const;
  // Verify the plus space support condition over the stored range.
  bool plus_space_ok() const;
};

// View a weight k index 1 Jacobi form as a form of weight k - 1/2:
// a(D) = C(D).
HalfIntForm plus_form_from_jacobi(const JacobiForm1& phi);

// The U(r^2) operator, normalized so that c(f|U(r^2), n) = c(f, r^2 n):
// a'(n) = a(r^2 n) with the global factor multiplied by r^{1/2 - kappa}.
HalfIntForm u_r2(const HalfIntForm& f, int64_t r);

// Hecke eigenvalue at p read off from the coefficient recursion
// c(f, p^2 n) = c(f, n) (lambda - (d|p)/sqrt(p)), d = (-1)^kappa n,
// over odd squarefree n. Throws "no usable n" when fewer than three
// indices with a(n) != 0 fit in the stored range, and "not an
// eigenform" when the extracted values disagree beyond 1e-9 or exceed
// the Deligne bound.
double lambda_extract(const HalfIntForm& f, int64_t p);

// |c(f, r^2 n)| <= 3^{Omega(r)} |c(f, n)| over odd squarefree n with
// r^2 n in range; returns false on the first violation. The bound is
// only claimed for odd r coprime to level/4 (unchecked precondition).
bool second_claim_bound_check(const HalfIntForm& f, int64_t r, int64_t n_max);

// Built-in forms "f19/2" (kappa = 9) and "f23/2" (kappa = 11) with
// coefficients up to max_n.
HalfIntForm builtin_form(const std::string& label, int64_t max_n,
                         int threads = 1);

}  // namespace fc

#endif
