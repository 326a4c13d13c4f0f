#include "fc/satake.hpp"

#include <cmath>
#include <iostream>
#include <random>

#include "doctest.h"
#include "fc/arith.hpp"
#include "fc/qexp.hpp"

using namespace fc;

// unit-normalized eigenvalue data for the weight 12 level 1 cusp form,
// built directly from its integer coefficients
static Eigenform delta_form(int64_t X) {
  Eigenform f;
  f.label = "delta";
  f.weight = 12;
  f.halfk = 6;
  f.max_n = X;
  auto tau = delta_coeffs(X);
  f.lam.assign(static_cast<size_t>(X) + 1, 0);
  for (int64_t n = 1; n <= X; ++n)
    f.lam[static_cast<size_t>(n)] =
        tau[static_cast<size_t>(n)].get_d() / std::pow(n, 5.5);
  return f;
}

TEST_CASE("power sums at the worked point") {
  SatakeGSp4 s{{0, 1}, {1, 0}};  // alpha = i, beta = 1
  CHECK(a_pi(s, 1) == doctest::Approx(2).epsilon(1e-14));
  CHECK(a_std(s, 1) == doctest::Approx(1).epsilon(1e-14));
  CHECK(a_ad(s, 1) == doctest::Approx(2).epsilon(1e-14));
  CHECK(a_pi(s, 2) == doctest::Approx(0).epsilon(1e-14));
  auto d = derived_satake(s);
  CHECK(d.std_set.size() == 5);
  CHECK(d.ad_set.size() == 10);
}

TEST_CASE("square identities hold for fuzzed unitary data") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  double worst = 0, worst_bound = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    SatakeGSp4 s{std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng))};
    // (6.2) and (6.3)
    worst = std::max(worst,
                     std::abs(a_pi(s, 2) - (a_ad(s, 1) - a_std(s, 1) - 1)));
    worst = std::max(
        worst, std::abs(a_pi(s, 1) * a_pi(s, 1) -
                        (a_ad(s, 1) + a_std(s, 1) + 1)));
    // (6.4) in each splitting case; Lambda(P) a random root of unity
    double th = ang(rng);
    AIParams split{std::polar(1.0, th), std::polar(1.0, -th),
                   SplitType::split};
    AIParams split_sq{std::polar(1.0, 2 * th), std::polar(1.0, -2 * th),
                      SplitType::split};
    AIParams inert{1.0, -1.0, SplitType::inert};
    AIParams inert_sq{1.0, -1.0, SplitType::inert};
    double sgn = (trial % 2) ? 1.0 : -1.0;
    AIParams ram{sgn, 0.0, SplitType::ramified};
    AIParams ram_sq{1.0, 0.0, SplitType::ramified};
    worst = std::max(worst, rs_square_identity_check(s, split, split_sq, 1));
    worst = std::max(worst, rs_square_identity_check(s, inert, inert_sq, -1));
    worst = std::max(worst, rs_square_identity_check(s, ram, ram_sq, 0));
    // bound (6.1) over n <= 20
    for (int n = 1; n <= 20; ++n) {
      for (const AIParams* a : {&split, &inert, &ram})
        worst_bound =
            std::max(worst_bound, std::abs(a_pi(s, n) * a_ai(*a, n)));
    }
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_bound <= 8 + 1e-12);
}

TEST_CASE("square identity with genuine class group characters") {
  auto g18 = eigenform("g18", 200);
  auto g22 = eigenform("g22", 200);
  auto pi = yoshida_pi(g18, g22, 100);
  for (int64_t dd : {-23, -47, -71}) {
    auto G = class_group(dd);
    for (const auto& chi : characters(G)) {
      auto chi2 = chi.squared();
      for (int64_t p : primes_up_to(50)) {
        auto ai = ai_satake(G, chi, p);
        auto ai_sq = ai_satake(G, chi2, p);
        CHECK(rs_square_identity_check(pi.at(p), ai, ai_sq,
                                       kronecker(dd, p)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("chandee sum respects the termwise bound") {
  auto g18 = eigenform("g18", 2100);
  auto g22 = eigenform("g22", 2100);
  auto pi = yoshida_pi(g18, g22, 2048);
  auto G = class_group(-10007);
  const auto chars = characters(G);
  for (double x : {2.0, 64.0, 2000.0}) {
    double c0_term = 2 * std::log(10007.0) / std::log(x);
    double cap = 0;
    for (int64_t p : primes_up_to(static_cast<int64_t>(x))) {
      double pn = p;
      for (int n = 1; pn <= x; ++n, pn *= p) cap += 8 / (n * std::sqrt(pn));
    }
    for (size_t i = 0; i < 3; ++i) {
      double v = chandee_sum(pi, G, chars[i], x);
      CHECK(v <= c0_term + cap + 1e-12);
      CHECK(v >= c0_term - cap - 1e-12);
    }
  }
  CHECK_THROWS(chandee_sum(pi, G, chars[0], 1.5));
}

TEST_CASE("smoothed prime sum P vanishes when every prime is inert") {
  auto g18 = eigenform("g18", 50);
  auto g22 = eigenform("g22", 50);
  auto pi = yoshida_pi(g18, g22, 40);
  auto G = class_group(-163);  // all p <= 37 are inert
  for (const auto& chi : characters(G))
    CHECK(P_Lambda(pi, G, chi, 37) == 0.0);
}

TEST_CASE("P weight vanishes at the endpoint prime") {
  auto g18 = eigenform("g18", 50);
  auto g22 = eigenform("g22", 50);
  auto pi = yoshida_pi(g18, g22, 40);
  auto G = class_group(-23);  // 2 splits
  auto chars = characters(G);
  // x = 2: the only prime in range carries weight log(x/p) = 0
  CHECK(P_Lambda(pi, G, chars[0], 2) == 0.0);
}

TEST_CASE("A_K is an exact monotone tail fraction") {
  auto g18 = eigenform("g18", 600);
  auto g22 = eigenform("g22", 600);
  auto pi = yoshida_pi(g18, g22, 512);
  auto G = class_group(-10007);
  double x = 500;
  CHECK(A_K(pi, G, -1e9, x) == 1.0);
  CHECK(A_K(pi, G, 1e9, x) == 0.0);
  double prev = 1.0;
  for (double V = -3; V <= 3; V += 0.5) {
    double a = A_K(pi, G, V, x);
    CHECK(a <= prev + 1e-15);
    CHECK(a >= 0);
    CHECK(a <= 1);
    prev = a;
  }
  double lld = std::log(std::log(10007.0));
  std::cout << "[satake] A_K tail vs exp(-V^2/(2 log log|d|)):\n";
  for (double V : {0.5, 1.0, 1.5, 2.0})
    std::cout << "  V=" << V << " A_K=" << A_K(pi, G, V, x)
              << " shape=" << std::exp(-V * V / (2 * lld)) << "\n";
}

TEST_CASE("moment bounds by full character enumeration") {
  // worked equality case: d = -23, l = 1, b_2 = 1; x = 2 is the
  // largest admissible cutoff (x must stay below sqrt(23)/2 ~ 2.4)
  // and already includes the split prime 2
  {
    auto G = class_group(-23);
    auto res = moment_bound_check(G, {{2, 1.0}}, 2, 1, false);
    CHECK(res.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.ok);
  }
  // ramified case with a single small ramified prime: 3 | 51
  {
    auto G = class_group(-51);
    auto res = moment_bound_check(G, {{3, 1.0}}, 3, 1, true);
    CHECK(res.lhs == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(res.rhs == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(res.ok);
  }
  // admissible sweeps
  for (int64_t dd : {-23, -47, -71, -163}) {
    auto G = class_group(dd);
    double cap = std::sqrt(static_cast<double>(-dd)) / 2;
    for (int l : {1, 2}) {
      double xmax = std::pow(cap, 1.0 / l);
      if (xmax <= 2) continue;
      double x = xmax * 0.999;
      std::map<int64_t, double> b;
      for (int64_t p : primes_up_to(static_cast<int64_t>(x)))
        b[p] = 1.0 / std::log(2.0 * p);
      auto res = moment_bound_check(G, b, x, l, false);
      CHECK(res.ok);
    }
  }
  auto G = class_group(-23);
  CHECK_THROWS(moment_bound_check(G, {{2, 1.0}}, 5, 1, false));
  CHECK_THROWS(moment_bound_check(G, {{2, 1.0}}, 4, 2, false));
}

TEST_CASE("seeded random model statistics") {
  std::map<int64_t, double> b;
  for (int64_t p : primes_up_to(99)) b[p] = 1.0;
  auto st = random_model_mc(b, -23, 100, 100000, 424242);
  CHECK(st.predicted_variance > 0);
  CHECK(std::abs(st.variance / st.predicted_variance - 1) <= 0.05);
  double sigma = std::sqrt(st.predicted_variance);
  CHECK(std::abs(st.mean) <= 4 * sigma / std::sqrt(100000.0));
  // bit-for-bit reproducibility
  auto st2 = random_model_mc(b, -23, 100, 100000, 424242);
  CHECK(st.mean == st2.mean);
  CHECK(st.variance == st2.variance);
  CHECK(st.histogram == st2.histogram);
  auto st3 = random_model_mc(b, -23, 100, 100000, 5);
  CHECK(st.mean != st3.mean);
  // degenerate input
  std::map<int64_t, double> zero{{5, 0.0}};
  auto stz = random_model_mc(zero, -23, 100, 10000, 1);
  CHECK(stz.mean == 0);
  CHECK(stz.variance == 0);
  CHECK_THROWS(random_model_mc(b, -23, 100, 100, 1));
}

TEST_CASE("gaussian integral closed form") {
  for (double sigma : {0.5, 1.0, 2.6, 10.0})
    CHECK(gaussian_integral_check(sigma) < 1e-8);
  CHECK_THROWS(gaussian_integral_check(0.01));
  // scaling law of the closed form, checked through the quadrature
  double s = 2.0;
  auto value = [](double sig) {
    return std::sqrt(2 * M_PI * sig) * std::exp(sig / 8);
  };
  CHECK(value(4 * s) / value(s) ==
        doctest::Approx(2 * std::exp(3 * s / 8)).epsilon(1e-12));
}

TEST_CASE("lemma style sums on Yoshida shape data") {
  auto f1 = delta_form(100000);
  auto g22 = eigenform("g22", 100000);
  auto pi = yoshida_pi(f1, g22, 100000);
  auto G = class_group(-23);
  auto chars = characters(G);
  for (double x : {10000.0, 100000.0}) {
    auto [s1, s2] = lemma62_sums(pi, G, chars[1], x);
    CHECK(s2 >= 0);
    double llx = std::log(std::log(x));
    std::cout << "[satake] x=" << x << " sum_i=" << s1 << " (vs "
              << -llx << ") sum_ii=" << s2 << " (vs " << 0.5 * llx
              << ")\n";
  }
  // small x hand check over p in {2, 3}
  double x = 10;
  double lx = std::log(x);
  double hand = 0;
  for (int64_t p : {2, 3}) {
    auto ai = ai_satake(G, chars[1], p);
    hand += a_pi(pi.at(p), 2) * a_ai(ai, 2) *
            std::pow(static_cast<double>(p), -1 - 2 / lx) *
            std::log(x / p) / lx;
  }
  auto [s1, s2] = lemma62_sums(pi, G, chars[1], x);
  CHECK(s1 == doctest::Approx(hand).epsilon(1e-13));
  CHECK(s2 >= 0);
}
