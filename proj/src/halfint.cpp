#include "fc/halfint.hpp"

#include <cmath>
#include <stdexcept>

#include "fc/arith.hpp"

namespace fc {

static const mpq_class kZeroQ(0);

const mpq_class& HalfIntForm::raw(int64_t n) const {
  if (n < 0 || n > max_index())
    throw std::out_of_range("HalfIntForm::raw: index beyond stored range");
  return a[static_cast<size_t>(n)];
}

double HalfIntForm::coeff(int64_t n) const {
  return raw(n).get_d() * scale.get_d() * std::sqrt(sqrt_arg.get_d());
}

double HalfIntForm::c(int64_t n) const {
  if (n < 1) throw std::invalid_argument("HalfIntForm::c: n >= 1");
  return coeff(n) *
         std::pow(static_cast<double>(n), 0.25 - 0.5 * kappa);
}

bool HalfIntForm::plus_space_ok() const {
  for (int64_t n = 1; n <= max_index(); ++n) {
    int64_t s = (kappa % 2) ? ((4 - n % 4) % 4) : (n % 4);  // (-1)^kappa n mod 4
    if ((s == 2 || s == 3) && a[static_cast<size_t>(n)] != 0) return false;
  }
  return true;
}

HalfIntForm plus_form_from_jacobi(const JacobiForm1& phi) {
  HalfIntForm f;
  f.kappa = phi.weight - 1;
  f.level = 4;
  f.plus_flag = true;
  f.a.reserve(phi.C.size());
  for (const auto& c : phi.C) f.a.emplace_back(c);
  return f;
}

HalfIntForm u_r2(const HalfIntForm& f, int64_t r) {
  if (r < 1) throw std::invalid_argument("u_r2: r >= 1");
  HalfIntForm g;
  g.kappa = f.kappa;
  g.level = f.level;
  g.plus_flag = f.plus_flag;
  // scale * r^{1 - kappa}, sqrt_arg / r: together r^{1/2 - kappa}.
  mpz_class rp;
  mpz_ui_pow_ui(rp.get_mpz_t(), static_cast<unsigned long>(r),
                static_cast<unsigned long>(f.kappa - 1));
  g.scale = f.scale / mpq_class(rp);
  g.sqrt_arg = f.sqrt_arg / r;
  g.sqrt_arg.canonicalize();
  g.scale.canonicalize();
  int64_t m = f.max_index() / (r * r);
  g.a.resize(static_cast<size_t>(m) + 1);
  for (int64_t n = 0; n <= m; ++n)
    g.a[static_cast<size_t>(n)] = f.a[static_cast<size_t>(r * r * n)];
  return g;
}

double lambda_extract(const HalfIntForm& f, int64_t p) {
  if (p < 2 || !is_prime64(static_cast<uint64_t>(p)))
    throw std::invalid_argument("lambda_extract: p must be prime");
  std::vector<double> vals;
  double rp = 1.0 / std::sqrt(static_cast<double>(p));
  for (int64_t n = 1; n <= f.max_index() / (p * p) && vals.size() < 8; ++n) {
    if (n % 2 == 0 || !is_squarefree(n)) continue;
    const mpq_class& an = f.raw(n);
    if (an == 0) continue;
    mpq_class ratio = f.raw(p * p * n) / an;
    // c(p^2 n)/c(n) = ratio * p^{1/2 - kappa}
    double cr = ratio.get_d() * std::pow(static_cast<double>(p), 0.5 - f.kappa);
    int64_t d = (f.kappa % 2) ? -n : n;
    vals.push_back(cr + kronecker(d, p) * rp);
  }
  if (vals.size() < 3) throw std::runtime_error("no usable n");
  double lo = vals[0], hi = vals[0];
  for (double v : vals) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo > 1e-9 || std::fabs(vals[0]) > 2.0 + 1e-9)
    throw std::runtime_error("not an eigenform");
  return vals[0];
}

bool second_claim_bound_check(const HalfIntForm& f, int64_t r, int64_t n_max) {
  double bound = std::pow(3.0, big_omega(r));
  double rfac = std::pow(static_cast<double>(r), 1.0 - 2.0 * f.kappa);
  for (int64_t n = 1; n <= n_max && r * r * n <= f.max_index(); ++n) {
    if (n % 2 == 0 || !is_squarefree(n)) continue;
    const mpq_class& an = f.raw(n);
    const mpq_class& arn = f.raw(r * r * n);
    // |c(r^2 n)| <= 3^{Omega(r)} |c(n)| is equivalent to
    // a(r^2 n)^2 * r^{1 - 2 kappa} <= 9^{Omega(r)} a(n)^2.
    double lhs = arn.get_d() * arn.get_d() * rfac;
    double rhs = bound * bound * an.get_d() * an.get_d();
    if (lhs > rhs * (1.0 + 1e-9)) return false;
  }
  return true;
}

HalfIntForm builtin_form(const std::string& label, int64_t max_n, int threads) {
  int k;
  if (label == "f19/2")
    k = 10;
  else if (label == "f23/2")
    k = 12;
  else
    throw std::invalid_argument("builtin_form: unknown label " + label);
  return plus_form_from_jacobi(jacobi_cusp_index1(k, max_n, threads));
}

}  // namespace fc
