#include "fc/resonance.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "fc/arith.hpp"
#include "fc/parallel.hpp"

namespace fc {

double ResonatorParams::r(int64_t p) const {
  double p2 = L * L, p4 = p2 * p2;
  double pd = static_cast<double>(p);
  if (pd < p2 || pd > p4) return 0;
  if (N % p == 0) return 0;
  return L / (std::sqrt(pd) * std::log(pd));
}

double ResonatorParams::r_of(int64_t m) const {
  if (m < 1) return 0;
  double out = 1;
  for (auto [p, e] : factorize(m)) {
    if (e > 1) return 0;
    double rp = r(p);
    if (rp == 0) return 0;
    out *= rp;
  }
  return out;
}

ResonatorParams resonator_params(double X, const Eigenform& lam0, int64_t N,
                                 double L_override, double M_override) {
  if (X < 3) throw std::invalid_argument("X too small");
  ResonatorParams P;
  P.X = X;
  P.N = N;
  P.lam0 = &lam0;
  P.M = std::pow(X, 1.0 / 24.0);
  if (M_override > 0) P.M = M_override;
  double lm = std::log(P.M);
  P.L = lm > 1 ? 0.125 * std::sqrt(lm * std::log(lm)) : 0;
  if (L_override > 0) P.L = L_override;
  double hi = P.L * P.L * P.L * P.L;
  if (hi >= 2) {
    for (int64_t p : primes_up_to(static_cast<int64_t>(hi)))
      if (P.r(p) != 0) P.window.push_back(p);
  }
  return P;
}

double resonator_value(const ResonatorParams& P, int64_t d) {
  if (!is_fundamental(d)) throw std::invalid_argument("d must be fundamental");
  // depth-first over squarefree products of window primes up to M
  double total = 1;  // the m = 1 term
  std::function<void(size_t, double, double)> walk = [&](size_t i, double m,
                                                         double val) {
    for (size_t j = i; j < P.window.size(); ++j) {
      int64_t p = P.window[j];
      double m2 = m * static_cast<double>(p);
      if (m2 > P.M) break;  // window is ascending
      double v = val * P.r(p) * P.lam0->lambda(p) * kronecker(d, p);
      total += v;
      walk(j + 1, m2, v);
    }
  };
  walk(0, 1.0, 1.0);
  return total;
}

double calR(const ResonatorParams& P) {
  double out = 1;
  for (int64_t p : P.window) {
    double t = P.r(p) * P.lam0->lambda(p);
    out *= 1 + t * t;
  }
  return out;
}

bool family_contains(const FamilyD& fam, int64_t d) {
  if (d >= 0) return false;
  int64_t n = -d;
  if (n % 2 == 0 || !is_squarefree(n)) return false;
  if (gcd64(n, fam.N) != 1) return false;
  int64_t m = 4 * fam.N;
  return ((d % m) + m) % m == ((fam.eta % m) + m) % m;
}

std::vector<int64_t> family_members(const FamilyD& fam, double lo, double hi) {
  std::vector<int64_t> out;
  for (int64_t n = static_cast<int64_t>(std::ceil(lo));
       n <= static_cast<int64_t>(std::floor(hi)); ++n)
    if (family_contains(fam, -n)) out.push_back(-n);
  return out;
}

static double half_mollifier(double t) { return t > 0 ? std::exp(-1.0 / t) : 0; }

static double smooth_step(double t) {
  double a = half_mollifier(t), b = half_mollifier(1 - t);
  return a / (a + b);
}

double smooth_bump(double t) {
  if (t <= 1 || t >= 2) return 0;
  return smooth_step(10 * (t - 1)) * smooth_step(10 * (2 - t));
}

static double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth > 40 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

static void satake_squares(const Eigenform& g, int64_t p,
                           std::complex<double>& a2,
                           std::complex<double>& b2) {
  std::complex<double> lam = g.lambda(p);
  std::complex<double> disc = std::sqrt(lam * lam - 4.0);
  std::complex<double> a = 0.5 * (lam + disc);
  std::complex<double> b = 0.5 * (lam - disc);
  a2 = a * a;
  b2 = b * b;
}

double euler_G_local(double s, int64_t p, int64_t u, const Eigenform& g,
                     int64_t N) {
  double pd = static_cast<double>(p);
  double x = std::pow(pd, 2 * s + 1);
  if ((2 * N) % p == 0) {
    std::complex<double> a2, b2;
    satake_squares(g, p, a2, b2);
    std::complex<double> inv = (1.0 - a2 / x) * (1.0 - 1.0 / x) * (1.0 - b2 / x);
    return inv.real();
  }
  // split u = u1 u2^2 locally: only the p-part matters
  int e = 0;
  for (int64_t v = u; v % p == 0; v /= p) ++e;
  if (e % 2 == 1) return (1 - 1 / pd) * (1 - 1 / x);
  if (e > 0) return (1 - 1 / pd) * (1 - 1 / (x * x));
  std::complex<double> a2, b2;
  satake_squares(g, p, a2, b2);
  std::complex<double> third =
      1.0 + (1.0 / pd) * (1.0 - a2 / x) * (1.0 - b2 / x) + 1.0 / x;
  return (1 - 1 / pd) * (1 - 1 / x) * third.real();
}

double euler_G(double s, int64_t u, const Eigenform& g, int64_t N,
               int64_t P0) {
  if (u < 1 || u % 2 == 0 || gcd64(u, N) != 1)
    throw std::invalid_argument("u must be odd, positive, coprime to N");
  if (P0 > g.max_n) P0 = g.max_n;
  double out = 1;
  for (int64_t p : primes_up_to(P0)) out *= euler_G_local(s, p, u, g, N);
  return out;
}

double ds1_central(const Eigenform& g) {
  // chi_d(2) is equidistributed over +-1 on the family when N = 1, so
  // the d-average of the 2-power series keeps the even powers only.
  // lambda(2^j) by the Hecke recursion, weights 2^{-j/2}.
  double lam2 = g.lambda(2);
  double prev = 1, cur = lam2, w = 1, out = 1;
  for (int j = 2; j <= 400; ++j) {
    double next = lam2 * cur - prev;
    prev = cur;
    cur = next;
    if (j % 2 == 0) {
      w /= 2.0;  // 2^{-j/2} advances by 1/2 per even step
      double term = cur * w;
      out += term;
      if (j > 8 && std::abs(term) < 1e-16) break;
    }
  }
  return out;
}

MomentResult twisted_moment_lhs(const Eigenform& g, int64_t u, double X,
                                const std::function<double(double)>& Phi,
                                int threads, int64_t N, int64_t eta) {
  if (u < 1 || u % 2 == 0) throw std::invalid_argument("u must be odd positive");
  FamilyD fam{N, eta};
  auto ds = family_members(fam, X / 2, 5 * X / 2);
  std::vector<double> vals(ds.size(), 0), errs(ds.size(), 0);
  parallel_blocks(ds.size(), threads, [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      int64_t d = ds[i];
      double w = Phi(static_cast<double>(-d) / X);
      if (w == 0) continue;
      int chi_u = kronecker(d, u);
      if (chi_u == 0) continue;
      LValue L = central_value_twist(g, d);
      vals[i] = L.value * chi_u * w;
      errs[i] = L.est_error * std::abs(w);
    }
  });
  MomentResult out;
  for (size_t i = 0; i < ds.size(); ++i) {
    out.value += vals[i];
    out.est_error += errs[i];
    if (vals[i] != 0) ++out.terms;
  }
  return out;
}

double twisted_moment_main(const Eigenform& g, int64_t u, double X,
                           const std::function<double(double)>& Phi,
                           int64_t N) {
  if (u < 1 || u % 2 == 0) throw std::invalid_argument("u must be odd positive");
  int64_t u1 = 1;
  for (auto [p, e] : factorize(u))
    if (e % 2 == 1) u1 *= p;
  double integral = adaptive_simpson(Phi, 0.5, 2.5, 1e-10);
  double front = X * g.lambda(u1) /
                 (2.0 * static_cast<double>(N) * std::sqrt(static_cast<double>(u1)));
  int64_t P0 = std::min<int64_t>(100000, g.max_n);
  return front * integral * ds1_central(g) * sym2_L_at_1(g, P0).value *
         euler_G(0.0, u, g, N, P0);
}

std::string EstimatesReport::csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "quantity,value,comparator\n";
  os << "sum_L_R2," << sum_L_R2 << "," << comp_lower << "\n";
  os << "sum_R2," << sum_R2 << "," << comp_R2 << "\n";
  os << "sum_R6," << sum_R6 << "," << comp_R6 << "\n";
  os << "calR," << calR_value << ",\n";
  return os.str();
}

EstimatesReport estimates_report(const ResonatorParams& P,
                                 const Eigenform& g0, int threads) {
  EstimatesReport rep;
  rep.X = P.X;
  rep.calR_value = calR(P);
  FamilyD fam{P.N, 1};
  auto ds = family_members(fam, P.X, 2 * P.X);
  std::vector<double> Ls(ds.size(), 0), Rs(ds.size(), 0);
  parallel_blocks(ds.size(), threads, [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      Rs[i] = resonator_value(P, ds[i]);
      Ls[i] = central_value_twist(g0, ds[i]).value;
    }
  });
  for (size_t i = 0; i < ds.size(); ++i) {
    double R2 = Rs[i] * Rs[i];
    rep.sum_L_R2 += Ls[i] * R2;
    rep.sum_R2 += R2;
    rep.sum_R6 += R2 * R2 * R2;
  }
  double lX = std::log(P.X);
  rep.comp_R2 = 2 * P.X / (M_PI * M_PI) * rep.calR_value;
  rep.comp_R6 = P.X * std::exp(lX / std::log(lX));
  double logL = P.L > 1.01 ? std::log(P.L) : 1;
  rep.comp_lower = P.X * rep.calR_value * std::exp(0.5 * P.L / logL);
  return rep;
}

}  // namespace fc
