#include "fc/lfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fc/arith.hpp"
#include "fc/cache.hpp"
#include "fc/parallel.hpp"
#include "fc/qexp.hpp"

namespace fc {

double Eigenform::lambda(int64_t n) const {
  if (n < 1 || n > max_n)
    throw std::out_of_range("Eigenform::lambda: n out of range");
  return lam[static_cast<size_t>(n)];
}

std::vector<mpz_class> eigenform_ap(const std::string& label, int64_t X,
                                    int threads) {
  int ek;
  if (label == "g18")
    ek = 6;
  else if (label == "g22")
    ek = 10;
  else
    throw std::invalid_argument("eigenform_ap: unknown label " + label);
  std::string name = "ap_" + label.substr(1) + "_" + std::to_string(X);
  auto primes = primes_up_to(X);
  std::vector<mpz_class> ap;
  if (cache_load(name, ap) && ap.size() == primes.size()) return ap;
  auto tau = delta_coeffs(X);
  auto e = eisenstein_coeffs(ek, X);
  ap.assign(primes.size(), 0);
  parallel_blocks(static_cast<int64_t>(primes.size()), threads,
                  [&](int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i) {
      int64_t p = primes[static_cast<size_t>(i)];
      mpz_class acc(0);
      // g = Delta * E: a(p) = sum_{j=1..p} tau(j) e(p - j).
      for (int64_t j = 1; j <= p; ++j)
        mpz_addmul(acc.get_mpz_t(), tau[static_cast<size_t>(j)].get_mpz_t(),
                   e[static_cast<size_t>(p - j)].get_mpz_t());
      ap[static_cast<size_t>(i)] = acc;
    }
  });
  cache_store(name, ap);
  return ap;
}

Eigenform eigenform(const std::string& label, int64_t X, int threads) {
  Eigenform g;
  g.label = label;
  g.weight = (label == "g18") ? 18 : (label == "g22") ? 22 : 0;
  if (g.weight == 0)
    throw std::invalid_argument("eigenform: unknown label " + label);
  g.halfk = g.weight / 2;
  g.max_n = X;
  g.lam.assign(static_cast<size_t>(X) + 1, 0.0);
  if (X < 1) return g;
  g.lam[1] = 1.0;
  auto primes = primes_up_to(X);
  auto ap = eigenform_ap(label, X, threads);
  double half = 0.5 * (g.weight - 1);
  // lambda at primes, then prime powers by the Hecke recursion, then
  // all composites by multiplicativity (increasing n order is enough).
  auto spf = spf_table(static_cast<int32_t>(X));
  std::vector<double> lamp(static_cast<size_t>(X) + 1, 0.0);
  for (size_t i = 0; i < primes.size(); ++i) {
    int64_t p = primes[i];
    double l1 = ap[i].get_d() / std::pow(static_cast<double>(p), half);
    lamp[static_cast<size_t>(p)] = l1;
    double prev = 1.0, cur = l1;
    for (int64_t q = p * p; q <= X; q *= p) {
      double next = l1 * cur - prev;
      lamp[static_cast<size_t>(q)] = next;
      prev = cur;
      cur = next;
      if (q > X / p) break;
    }
  }
  for (int64_t n = 2; n <= X; ++n) {
    int64_t p = spf[static_cast<size_t>(n)];
    int64_t q = p;
    int64_t m = n / p;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    g.lam[static_cast<size_t>(n)] =
        (m == 1) ? lamp[static_cast<size_t>(q)]
                 : lamp[static_cast<size_t>(q)] * g.lam[static_cast<size_t>(m)];
  }
  return g;
}

double dirichlet_L1(int64_t d) {
  if (d >= 0 || !is_fundamental(d))
    throw std::invalid_argument("dirichlet_L1: d must be fundamental, < 0");
  // L(1, chi_d) = -pi |d|^{-3/2} sum_{a=1}^{|d|-1} chi_d(a) a.
  int64_t q = -d;
  auto spf = spf_table(static_cast<int32_t>(q));
  std::vector<int8_t> chi(static_cast<size_t>(q), 0);
  if (q > 1) chi[1] = 1;
  int64_t s = 0;
  for (int64_t a = 2; a < q; ++a) {
    int64_t p = spf[static_cast<size_t>(a)];
    chi[static_cast<size_t>(a)] =
        (a == p) ? static_cast<int8_t>(kronecker(d, p))
                 : static_cast<int8_t>(chi[static_cast<size_t>(p)] *
                                       chi[static_cast<size_t>(a / p)]);
    s += chi[static_cast<size_t>(a)] * a;
  }
  s += (q > 1) ? 1 : 0;  // a = 1 term
  return -M_PI * static_cast<double>(s) /
         (static_cast<double>(q) * std::sqrt(static_cast<double>(q)));
}

int64_t class_number_from_L1(int64_t d) {
  int w = (d == -3) ? 6 : (d == -4) ? 4 : 2;
  double L = dirichlet_L1(d);
  double h = w * std::sqrt(static_cast<double>(-d)) * L / (2.0 * M_PI);
  return llround(h);
}

// Regularized upper incomplete gamma Q(k, x) = Gamma(k, x)/Gamma(k)
// for integer k >= 1: e^{-x} sum_{i<k} x^i/i!.
static double reg_gamma_q(int k, double x) {
  if (x <= 0) return 1.0;
  double lg = 0.0;  // log(x^i / i!)
  double s = 0.0;
  for (int i = 0; i < k; ++i) {
    if (i > 0) lg += std::log(x) - std::log(static_cast<double>(i));
    s += std::exp(lg - x);
  }
  return s;
}

double afe_weight(const Eigenform& g, int chi2, double xi) {
  if (xi <= 0) throw std::invalid_argument("afe_weight: xi > 0");
  // W(xi) = sum_{j>=0} lambda(2^j) chi2^j 2^{-j/2} Q(halfk, 2 pi 2^j xi)
  double l2 = g.lambda(2);
  double prev = 1.0, cur = l2;  // lambda(2^j) by recursion
  double sum = reg_gamma_q(g.halfk, 2.0 * M_PI * xi);
  if (chi2 != 0) {
    double pw = 1.0;  // chi2^j 2^{-j/2}
    double arg = 2.0 * M_PI * xi;
    double lamj = l2;
    for (int j = 1; j < 300; ++j) {
      pw *= chi2 / std::sqrt(2.0);
      arg *= 2.0;
      double q = reg_gamma_q(g.halfk, arg);
      double term = lamj * pw * q;
      sum += term;
      double next = l2 * lamj - prev;
      prev = lamj;
      lamj = next;
      if (q < 1e-18 && j > 4) break;
    }
  }
  (void)cur;
  return sum;
}

// Lanczos approximation of log Gamma on the right half plane.
static std::complex<double> lngamma(std::complex<double> z) {
  static const double c[9] = {0.99999999999980993,  676.5203681218851,
                              -1259.1392167224028,  771.32342877765313,
                              -176.61502916214059,  12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

double afe_weight_contour(const Eigenform& g, int chi2, double xi, double cline) {
  if (xi <= 0 || cline <= 0)
    throw std::invalid_argument("afe_weight_contour: xi > 0, c > 0");
  double l2 = g.lambda(2);
  auto L2 = [&](std::complex<double> s) {
    // sum_j lambda(2^j) chi2^j 2^{-js}
    std::complex<double> acc = 1.0;
    if (chi2 != 0) {
      double prev = 1.0, lamj = l2;
      std::complex<double> x = std::pow(2.0, -s) * static_cast<double>(chi2);
      std::complex<double> xp = x;
      for (int j = 1; j <= 200; ++j) {
        acc += lamj * xp;
        xp *= x;
        double next = l2 * lamj - prev;
        prev = lamj;
        lamj = next;
      }
    }
    return acc;
  };
  double lgk = std::lgamma(static_cast<double>(g.halfk));
  auto F = [&](double t) {
    std::complex<double> s(cline, t);
    std::complex<double> v = L2(s + 0.5) *
                             std::exp(lngamma(s + static_cast<double>(g.halfk)) -
                                      lgk - s * std::log(2.0 * M_PI * xi)) /
                             s;
    return v.real();
  };
  // trapezoid over |t| <= T; the gamma factor decays like e^{-pi|t|/2}
  const double T = 60.0, h = 0.004;
  double sum = 0.5 * F(-T) + 0.5 * F(T);
  for (double t = -T + h; t < T - h / 2; t += h) sum += F(t);
  return sum * h / (2.0 * M_PI);
}

LValue central_value_twist(const Eigenform& g, int64_t d) {
  if (d >= 0 || !is_fundamental(d) || (((d % 4) + 4) % 4) != 1)
    throw std::invalid_argument(
        "central_value_twist: d must be fundamental, negative, 1 mod 4");
  double ad = static_cast<double>(-d);
  // Q(halfk, 2 pi xi) < 1e-15 for 2 pi xi > 66 at weight 11; xi_max 10.6
  double xi_max = 10.6;
  int64_t T = static_cast<int64_t>(xi_max * ad) + 1;
  if (T > g.max_n)
    throw std::invalid_argument("central_value_twist: eigenform table too small");
  int chi2 = kronecker(d, 2);
  double sum = 0.0, sum_half = 0.0;
  for (int64_t m = 1; m <= T; m += 2) {
    int ch = kronecker(d, m);
    if (ch == 0) continue;
    double term = g.lambda(m) * ch / std::sqrt(static_cast<double>(m)) *
                  afe_weight(g, chi2, static_cast<double>(m) / ad);
    sum += term;
    if (5 * m <= 4 * T) sum_half = sum;
  }
  // The terms decay superexponentially in m, so the block (0.8T, T]
  // dominates the true tail beyond T; use it as the truncation error.
  LValue out;
  out.value = 2.0 * sum;
  out.est_error = 2.0 * std::fabs(sum - sum_half) + 1e-12 * std::fabs(sum) + 1e-13;
  out.method = "afe-incgamma";
  return out;
}

double waldspurger_pair_deviation(const HalfIntForm& f, const Eigenform& g,
                                  int64_t n1, int64_t n2) {
  for (int64_t n : {n1, n2}) {
    if (!is_fundamental(-n) || n % 4 != 3)
      throw std::invalid_argument(
          "waldspurger_pair_deviation: -n must be fundamental, n ≡ 3 mod 4");
  }
  double c1 = f.c(n1), c2 = f.c(n2);
  if (c1 == 0.0 || c2 == 0.0)
    throw std::invalid_argument("waldspurger_pair_deviation: zero coefficient");
  auto L1 = central_value_twist(g, -n1);
  auto L2 = central_value_twist(g, -n2);
  if (L1.value <= 0 || L2.value <= 0)
    throw std::runtime_error("waldspurger_pair_deviation: nonpositive L-value");
  double ratio = (c1 * c1 * L2.value) / (c2 * c2 * L1.value);
  return std::fabs(ratio - 1.0);
}

LValue sym2_L_at_1(const Eigenform& g, int64_t P0) {
  if (P0 > g.max_n)
    throw std::invalid_argument("sym2_L_at_1: eigenform table too small");
  auto primes = primes_up_to(P0);
  double logL = 0.0, logL_half = 0.0;
  for (size_t i = 0; i < primes.size(); ++i) {
    double p = static_cast<double>(primes[i]);
    double l = g.lambda(primes[i]);
    double t = l * l - 2.0;  // alpha^2 + alpha^{-2}
    double denom = (1.0 - 1.0 / p) * (1.0 - t / p + 1.0 / (p * p));
    logL -= std::log(denom);
    if (primes[i] <= P0 / 2) logL_half = logL;
  }
  LValue out;
  out.value = std::exp(logL);
  out.est_error =
      std::fabs(out.value - std::exp(logL_half)) + 1e-12 * out.value;
  out.method = "euler-product";
  return out;
}

double sym2_L_at_1_series(const Eigenform& g, double Y) {
  // Coefficients of Sym^2: multiplicative, with the prime power
  // recursion h_j = (1+b) h_{j-1} - (1+b) h_{j-2} + h_{j-3},
  // b = lambda(p)^2 - 2.
  int64_t N = static_cast<int64_t>(36.0 * Y);
  auto spf = spf_table(static_cast<int32_t>(N));
  std::vector<double> h(static_cast<size_t>(N) + 1, 0.0);
  h[1] = 1.0;
  auto primes = primes_up_to(N);
  std::vector<double> hp(static_cast<size_t>(N) + 1, 0.0);
  for (int64_t p : primes) {
    double b = 0.0;
    if (p <= g.max_n) {
      double l = g.lambda(p);
      b = l * l - 2.0;
    } else {
      throw std::invalid_argument("sym2_L_at_1_series: eigenform table too small");
    }
    double h0 = 1.0, h1 = 1.0 + b, h2 = (1.0 + b) * h1 - (1.0 + b) * h0 + 0.0;
    // j = 1 value is lambda(p^2)... compute iteratively instead.
    (void)h2;
    std::vector<double> loc{1.0, 1.0 + b};
    for (int64_t q = p; q <= N; q *= p) {
      size_t j = loc.size();
      if (static_cast<int64_t>(j) > 64) break;
      double prev3 = (j >= 3) ? loc[j - 3] : 0.0;
      if (j >= 2) loc.push_back((1.0 + b) * loc[j - 1] - (1.0 + b) * loc[j - 2] + prev3);
      if (q > N / p) break;
    }
    for (int64_t q = p, j = 1; q <= N; q *= p, ++j) {
      hp[static_cast<size_t>(q)] = loc[static_cast<size_t>(j)];
      if (q > N / p) break;
    }
  }
  for (int64_t n = 2; n <= N; ++n) {
    int64_t p = spf[static_cast<size_t>(n)];
    int64_t q = p, m = n / p;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    h[static_cast<size_t>(n)] = (m == 1)
                                    ? hp[static_cast<size_t>(q)]
                                    : hp[static_cast<size_t>(q)] * h[static_cast<size_t>(m)];
  }
  double s = 0.0;
  for (int64_t n = 1; n <= N; ++n)
    s += h[static_cast<size_t>(n)] / static_cast<double>(n) *
         std::exp(-static_cast<double>(n) / Y);
  return s;
}

}  // namespace fc
