#include "fc/resonance.hpp"

#include <cmath>
#include <iostream>

#include "doctest.h"
#include "fc/arith.hpp"

using namespace fc;

static const Eigenform& g18_big() {
  static Eigenform g = eigenform("g18", 106000);
  return g;
}

TEST_CASE("resonator coefficients live on the prime window") {
  auto& g = g18_big();
  auto P = resonator_params(5000, g, 1, 10.0, 3000.0);
  CHECK(P.L == 10.0);
  CHECK(P.M == 3000.0);
  // r(101) = 10 / (sqrt(101) log 101)
  CHECK(P.r(101) == doctest::Approx(0.215609).epsilon(1e-5));
  CHECK(P.r(97) == 0);    // below L^2
  CHECK(P.r(10007) == 0); // above L^4
  for (int64_t m = 1; m <= 3000; ++m) {
    double rm = P.r_of(m);
    if (rm == 0) continue;
    CHECK(is_squarefree(m));
    double prod = 1;
    for (auto [p, e] : factorize(m)) {
      CHECK(e == 1);
      CHECK(p >= 100);
      CHECK(p <= 10000);
      prod *= P.r(p);
    }
    CHECK(rm == doctest::Approx(prod).epsilon(1e-14));
  }
}

TEST_CASE("paper scale parameters give a trivial resonator") {
  auto& g = g18_big();
  auto P = resonator_params(5000, g);
  // M = 5000^{1/24} is below 2, so the window is empty
  CHECK(P.M < 2);
  CHECK(P.window.empty());
  CHECK(calR(P) == 1.0);
  CHECK(resonator_value(P, -23) == 1.0);
}

TEST_CASE("resonator value matches a direct sum over m") {
  auto& g = g18_big();
  auto P = resonator_params(5000, g, 1, 10.0, 3000.0);
  REQUIRE(!P.window.empty());
  for (int64_t d : {-23, -47, -163, -7919}) {
    double direct = 0;
    for (int64_t m = 1; m <= 3000; ++m) {
      double rm = P.r_of(m);
      if (rm == 0 && m != 1) continue;
      if (m == 1) rm = 1;
      direct += rm * g.lambda(m) * kronecker(d, m);
    }
    CHECK(resonator_value(P, d) == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK_THROWS(resonator_value(P, -5));  // 3 mod 4, not fundamental
}

TEST_CASE("calR bounded by the term sum") {
  auto& g = g18_big();
  auto P = resonator_params(5000, g, 1, 10.0, 3000.0);
  double R = calR(P);
  CHECK(R >= 1);
  double bound = 0;
  for (int64_t p : P.window) bound += 4 * P.r(p) * P.r(p);
  CHECK(std::log(R) <= bound + 1e-12);
}

TEST_CASE("family membership matches the set definition") {
  FamilyD fam{1, 1};
  auto ds = family_members(fam, 100, 400);
  CHECK(!ds.empty());
  for (int64_t d : ds) {
    CHECK(d < 0);
    CHECK(is_fundamental(d));
    int64_t n = -d;
    CHECK(n % 2 == 1);
    CHECK(is_squarefree(n));
    CHECK(((d % 4) + 4) % 4 == 1);
  }
  // brute force the complement
  for (int64_t n = 100; n <= 400; ++n) {
    bool in = family_contains(fam, -n);
    bool expect = (n % 2 == 1) && is_squarefree(n) && (n % 4 == 3);
    CHECK(in == expect);
  }
  // level 3, eta = 13 ≡ 1 (mod 4)
  FamilyD fam3{3, 13};
  for (int64_t d : family_members(fam3, 100, 2000)) {
    CHECK(gcd64(-d, 3) == 1);
    CHECK(((d % 12) + 12) % 12 == 13 % 12);
  }
}

TEST_CASE("bump function shape and integral") {
  CHECK(smooth_bump(0.9) == 0);
  CHECK(smooth_bump(1.0) == 0);
  CHECK(smooth_bump(2.0) == 0);
  CHECK(smooth_bump(1.1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(smooth_bump(1.5) == 1.0);
  CHECK(smooth_bump(1.9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(smooth_bump(1.05) > 0);
  CHECK(smooth_bump(1.05) < 1);
  // quadrature sanity on a known integral
  double third = adaptive_simpson([](double x) { return x * x; }, 0, 1, 1e-12);
  CHECK(third == doctest::Approx(1.0 / 3).epsilon(1e-12));
  // bump integral vs a fine Riemann sum
  double fine = 0;
  int steps = 200000;
  for (int i = 0; i < steps; ++i)
    fine += smooth_bump(1.0 + (i + 0.5) / steps) / steps;
  double simp = adaptive_simpson(smooth_bump, 0.5, 2.5, 1e-10);
  CHECK(simp == doctest::Approx(fine).epsilon(1e-8));
}

TEST_CASE("euler product local factors") {
  auto& g = g18_big();
  // generic factors approach 1 quickly
  for (int64_t p : primes_up_to(10000)) {
    if (p == 2) continue;
    CHECK(std::abs(euler_G_local(0, p, 1, g, 1) - 1) <= 5.0 / p);
  }
  // printed elementary cases
  for (int64_t p : {3, 5, 7, 11}) {
    double pd = p;
    CHECK(euler_G_local(0, p, p, g, 1) ==
          doctest::Approx((1 - 1 / pd) * (1 - 1 / pd)).epsilon(1e-14));
    CHECK(euler_G_local(0, p, p * p, g, 1) ==
          doctest::Approx((1 - 1 / pd) * (1 - 1 / (pd * pd))).epsilon(1e-14));
  }
  CHECK_THROWS(euler_G(0, 2, g));
  CHECK_THROWS(euler_G(0, -3, g));
}

TEST_CASE("odd power local series oracle") {
  auto& g = g18_big();
  // the p | u1 factor times lambda(p) equals the direct local m-sum
  // (1 - 1/p) sum_k lambda(p^{2k+1}) p^{-k} times the inverse local
  // symmetric square factor
  for (int64_t p : {3, 5, 7, 13}) {
    double pd = p;
    double lam = g.lambda(p);
    // lambda(p^j) by recursion
    std::vector<double> lpj{1, lam};
    for (int j = 2; j <= 40; ++j)
      lpj.push_back(lam * lpj[j - 1] - lpj[j - 2]);
    double series = 0;
    for (int k = 0; k <= 18; ++k)
      series += lpj[static_cast<size_t>(2 * k + 1)] / std::pow(pd, k);
    double l2 = lam * lam - 2;  // alpha^2 + beta^2
    double sym2_inv = (1 - l2 / pd + 1 / (pd * pd) - 1 / pd +
                       l2 / (pd * pd) - 1 / (pd * pd * pd));
    // (1 - a2/p)(1 - 1/p)(1 - b2/p) expanded
    double direct = (1 - 1 / pd) * series * sym2_inv;
    double factored = lam * euler_G_local(0, p, p, g, 1);
    CHECK(direct == doctest::Approx(factored).epsilon(1e-6));
  }
}

TEST_CASE("euler product multiplicativity bookkeeping") {
  auto& g = g18_big();
  double G1 = euler_G(0, 1, g, 1, 10000);
  for (auto [u, v] : std::vector<std::pair<int64_t, int64_t>>{
           {3, 5}, {9, 25}, {3, 25}, {15, 49}}) {
    double lhs = euler_G(0, u * v, g, 1, 10000) * G1;
    double rhs = euler_G(0, u, g, 1, 10000) * euler_G(0, v, g, 1, 10000);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("twisted moment trivial cases") {
  auto& g = g18_big();
  auto zero = std::function<double(double)>([](double) { return 0.0; });
  CHECK(twisted_moment_lhs(g, 1, 1000, zero).value == 0);
  // u a square: every term nonnegative
  auto Phi = std::function<double(double)>(smooth_bump);
  auto m9 = twisted_moment_lhs(g, 9, 1000, Phi);
  CHECK(m9.value >= 0);
  // linear scaling of the main term in X
  double m1 = twisted_moment_main(g, 1, 1000, Phi);
  double m2 = twisted_moment_main(g, 1, 2000, Phi);
  CHECK(m2 == doctest::Approx(2 * m1).epsilon(1e-12));
  CHECK_THROWS(twisted_moment_lhs(g, 4, 1000, Phi));
  CHECK_THROWS(twisted_moment_main(g, 4, 1000, Phi));
}

TEST_CASE("twisted moment direct sum matches the main term") {
  auto& g = g18_big();
  auto Phi = std::function<double(double)>(smooth_bump);
  for (int64_t u : {int64_t(1), int64_t(9), int64_t(3)}) {
    auto lhs = twisted_moment_lhs(g, u, 2000, Phi);
    double main = twisted_moment_main(g, u, 2000, Phi);
    CHECK(std::abs(lhs.value / main - 1) <= 0.25);
  }
  for (int64_t u : {int64_t(1), int64_t(9)}) {
    auto lhs = twisted_moment_lhs(g, u, 4000, Phi);
    double main = twisted_moment_main(g, u, 4000, Phi);
    CHECK(std::abs(lhs.value / main - 1) <= 0.20);
  }
}

TEST_CASE("estimates report shapes") {
  auto& g = g18_big();
  auto P = resonator_params(5000, g);
  auto rep = estimates_report(P, g);
  CHECK(rep.sum_L_R2 > 0);
  CHECK(rep.sum_R2 > 0);
  CHECK(rep.sum_R6 > 0);
  CHECK(rep.calR_value >= 1);
  // the |R|^2 sum respects the upper bound shape with slack 1
  CHECK(rep.sum_R2 <= 2 * rep.comp_R2);
  CHECK(rep.sum_R6 <= rep.comp_R6);
  auto csv = rep.csv();
  CHECK(csv.find("sum_L_R2") != std::string::npos);
  // growth direction of the L-weighted sum, logged not asserted
  auto P1 = resonator_params(1000, g);
  auto rep1 = estimates_report(P1, g);
  std::cout << "[resonance] sum_L_R2/(calR*X): X=1000 -> "
            << rep1.sum_L_R2 / (rep1.calR_value * 1000) << ", X=5000 -> "
            << rep.sum_L_R2 / (rep.calR_value * 5000) << "\n";
}
