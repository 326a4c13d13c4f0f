#include "fc/satake.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fc/arith.hpp"
#include "fc/resonance.hpp"

namespace fc {

DerivedSatake derived_satake(const SatakeGSp4& s) {
  auto a = s.alpha, b = s.beta;
  auto ai = 1.0 / a, bi = 1.0 / b;
  DerivedSatake out;
  out.std_set = {1.0, a * b, a * bi, ai * b, ai * bi};
  out.ad_set = {a * a, ai * ai, b * b, bi * bi, a * b,
                ai * b, a * bi,  ai * bi, 1.0,  1.0};
  return out;
}

static double pow_sum_real(const std::complex<double>* v, size_t k, int n) {
  std::complex<double> t = 0;
  for (size_t i = 0; i < k; ++i) t += std::pow(v[i], n);
  return t.real();
}

double a_pi(const SatakeGSp4& s, int n) {
  std::complex<double> v[4] = {s.alpha, 1.0 / s.alpha, s.beta, 1.0 / s.beta};
  return pow_sum_real(v, 4, n);
}

double a_std(const SatakeGSp4& s, int n) {
  auto d = derived_satake(s);
  return pow_sum_real(d.std_set.data(), 5, n);
}

double a_ad(const SatakeGSp4& s, int n) {
  auto d = derived_satake(s);
  return pow_sum_real(d.ad_set.data(), 10, n);
}

double a_ai(const AIParams& a, int n) {
  return (std::pow(a.alpha, n) + std::pow(a.beta, n)).real();
}

double rs_square_identity_check(const SatakeGSp4& s, const AIParams& ai,
                                const AIParams& ai_sq, int chi_dp) {
  double lhs = a_pi(s, 2) * a_ai(ai, 2);
  double cd = chi_dp;
  double rhs = (a_ad(s, 1) - a_std(s, 1) - 1) *
               (a_ai(ai_sq, 1) + cd * cd - cd);
  return std::abs(lhs - rhs);
}

static std::complex<double> unit_from_lambda(double lam) {
  // alpha + 1/alpha = lam with |alpha| = 1
  double c = 0.5 * lam;
  if (c > 1) c = 1;
  if (c < -1) c = -1;
  return {c, std::sqrt(1 - c * c)};
}

std::map<int64_t, SatakeGSp4> yoshida_pi(const Eigenform& f1,
                                         const Eigenform& f2, int64_t X) {
  if (X > f1.max_n || X > f2.max_n)
    throw std::out_of_range("eigenform tables too small");
  std::map<int64_t, SatakeGSp4> out;
  for (int64_t p : primes_up_to(X))
    out[p] = {unit_from_lambda(f1.lambda(p)), unit_from_lambda(f2.lambda(p))};
  return out;
}

static const SatakeGSp4& pi_at(const std::map<int64_t, SatakeGSp4>& pi,
                               int64_t p) {
  auto it = pi.find(p);
  if (it == pi.end()) throw std::out_of_range("no Satake data at p");
  return it->second;
}

double chandee_sum(const std::map<int64_t, SatakeGSp4>& pi,
                   const ClassGroup& G, const Character& chi, double x,
                   double C0, int64_t N) {
  if (x < 2) throw std::invalid_argument("x must be >= 2");
  double lx = std::log(x);
  double sum = 0;
  for (int64_t p : primes_up_to(static_cast<int64_t>(x))) {
    if (N % p == 0) continue;
    auto& s = pi_at(pi, p);
    auto ai = ai_satake(G, chi, p);
    AIParams aip{ai.alpha, ai.beta, ai.type};
    double pn = static_cast<double>(p);
    for (int n = 1; pn <= x; ++n, pn *= p) {
      sum += a_pi(s, n) * a_ai(aip, n) /
             (n * std::pow(pn, 0.5 * (1 + 1 / lx)));
    }
  }
  return sum + C0 * std::log(static_cast<double>(-G.d)) / lx;
}

double P_Lambda(const std::map<int64_t, SatakeGSp4>& pi, const ClassGroup& G,
                const Character& chi, double x, int64_t N) {
  if (x < 2) throw std::invalid_argument("x must be >= 2");
  double lx = std::log(x);
  double sum = 0;
  for (int64_t p : primes_up_to(static_cast<int64_t>(x))) {
    if (N % p == 0) continue;
    auto& s = pi_at(pi, p);
    auto ai = ai_satake(G, chi, p);
    AIParams aip{ai.alpha, ai.beta, ai.type};
    double pd = static_cast<double>(p);
    sum += a_pi(s, 1) * a_ai(aip, 1) * std::pow(pd, -0.5 - 1 / lx) *
           std::log(x / pd) / lx;
  }
  return sum;
}

double A_K(const std::map<int64_t, SatakeGSp4>& pi, const ClassGroup& G,
           double V, double x, int64_t N) {
  int count = 0;
  for (const auto& chi : characters(G))
    if (P_Lambda(pi, G, chi, x, N) > V) ++count;
  return static_cast<double>(count) / G.h();
}

MomentBoundResult moment_bound_check(const ClassGroup& G,
                                     const std::map<int64_t, double>& b,
                                     double x, int l, bool ramified_case,
                                     int64_t N) {
  if (l < 1) throw std::invalid_argument("l must be positive");
  if (std::pow(x, l) >= std::sqrt(static_cast<double>(-G.d)) / 2)
    throw std::invalid_argument("x^l must be below sqrt|d|/2");
  std::vector<int64_t> ps;
  for (int64_t p : primes_up_to(static_cast<int64_t>(x))) {
    if (N % p == 0) continue;
    bool divides = ((-G.d) % p == 0);
    if (ramified_case == divides) ps.push_back(p);
  }
  MomentBoundResult out;
  for (const auto& chi : characters(G)) {
    double inner = 0;
    for (int64_t p : ps) {
      auto it = b.find(p);
      if (it == b.end()) continue;
      auto ai = ai_satake(G, chi, p);
      AIParams aip{ai.alpha, ai.beta, ai.type};
      inner += it->second * a_ai(aip, 1) / std::sqrt(static_cast<double>(p));
    }
    out.lhs += std::pow(inner, 2 * l);
  }
  out.lhs /= G.h();
  double diag = 0;
  for (int64_t p : ps) {
    auto it = b.find(p);
    if (it == b.end()) continue;
    if (!ramified_case && kronecker(G.d, p) != 1) continue;
    diag += it->second * it->second / static_cast<double>(p);
  }
  if (!ramified_case) diag *= 2;
  double fact = 1;  // (2l)! / (2^l l!)
  for (int j = 2 * l; j > l; j -= 2) fact *= j - 1;
  out.rhs = fact * std::pow(diag, l);
  out.ok = out.lhs <= out.rhs + 1e-12 * (1 + out.rhs);
  return out;
}

MCStats random_model_mc(const std::map<int64_t, double>& b, int64_t d,
                        int64_t X, int64_t samples, uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("need >= 10^4 samples");
  std::vector<std::pair<double, double>> terms;  // (b_p / sqrt p) per split p
  double pred = 0;
  for (int64_t p : primes_up_to(X - 1)) {
    if (kronecker(d, p) != 1) continue;
    auto it = b.find(p);
    if (it == b.end() || it->second == 0) continue;
    double w = it->second / std::sqrt(static_cast<double>(p));
    terms.push_back({w, 0});
    pred += 2 * it->second * it->second / static_cast<double>(p);
  }
  MCStats out;
  out.predicted_variance = pred;
  out.histogram.assign(41, 0);
  double sigma = std::sqrt(pred > 0 ? pred : 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  double sum = 0, sum2 = 0;
  for (int64_t i = 0; i < samples; ++i) {
    double z = 0;
    for (auto& [w, unused] : terms) z += w * 2 * std::cos(ang(rng));
    sum += z;
    sum2 += z * z;
    int bin = static_cast<int>(std::floor((z / sigma + 5) / 10 * 41));
    if (bin >= 0 && bin < 41) ++out.histogram[static_cast<size_t>(bin)];
  }
  out.mean = sum / samples;
  out.variance = sum2 / samples - out.mean * out.mean;
  return out;
}

double gaussian_integral_check(double sigma) {
  if (sigma < 0.1 || sigma > 100)
    throw std::invalid_argument("sigma out of range");
  double closed = std::sqrt(2 * M_PI * sigma) * std::exp(sigma / 8);
  // integrand peaks at t = sigma/4 with Gaussian width sqrt(sigma)
  double T = sigma / 4 + 40 * std::sqrt(sigma);
  auto f = [&](double t) {
    return std::exp(-t * t / (2 * sigma) + 0.5 * t);
  };
  double num = adaptive_simpson(f, sigma / 4 - T, sigma / 4 + T,
                                1e-12 * closed);
  return std::abs(num - closed) / closed;
}

std::pair<double, double> lemma62_sums(const std::map<int64_t, SatakeGSp4>& pi,
                                       const ClassGroup& G,
                                       const Character& chi, double x,
                                       int64_t N) {
  if (x < 4) throw std::invalid_argument("x must be >= 4");
  double lx = std::log(x);
  double s1 = 0, s2 = 0;
  for (int64_t p :
       primes_up_to(static_cast<int64_t>(std::sqrt(x)))) {
    if (N % p == 0) continue;
    auto& s = pi_at(pi, p);
    auto ai = ai_satake(G, chi, p);
    AIParams aip{ai.alpha, ai.beta, ai.type};
    double pd = static_cast<double>(p);
    s1 += a_pi(s, 2) * a_ai(aip, 2) * std::pow(pd, -1 - 2 / lx) *
          std::log(x / pd) / lx;
  }
  for (int64_t p : primes_up_to(static_cast<int64_t>(x))) {
    if (N % p == 0 || kronecker(G.d, p) != 1) continue;
    double ap = a_pi(pi_at(pi, p), 1);
    s2 += ap * ap / static_cast<double>(p);
  }
  return {s1, s2};
}

}  // namespace fc
