#include "fc/lfun.hpp"

#include <cmath>

#include "doctest.h"
#include "fc/arith.hpp"
#include "fc/classgroup.hpp"

using namespace fc;

TEST_CASE("eigenform a(p) values") {
  auto ap18 = eigenform_ap("g18", 30);
  // primes 2,3,5,...: a(2) = -528 for the weight 18 eigenform
  CHECK(ap18[0] == -528);
  CHECK(ap18[1] == -4284);  // a(3) = tau(1)e6(2)+tau(2)e6(1)+tau(3)e6(0)
  auto ap22 = eigenform_ap("g22", 30);
  CHECK(ap22[0] == -288);
  CHECK_THROWS(eigenform_ap("g20", 10));
}

TEST_CASE("eigenform lambda is multiplicative and Deligne bounded") {
  auto g = eigenform("g18", 3000);
  for (int64_t p : {2, 3, 5, 7, 11, 13})
    CHECK(std::fabs(g.lambda(p)) <= 2.0);
  // multiplicativity
  CHECK(g.lambda(6) == doctest::Approx(g.lambda(2) * g.lambda(3)).epsilon(1e-12));
  CHECK(g.lambda(35) == doctest::Approx(g.lambda(5) * g.lambda(7)).epsilon(1e-12));
  // Hecke recursion at p = 2
  CHECK(g.lambda(4) ==
        doctest::Approx(g.lambda(2) * g.lambda(2) - 1.0).epsilon(1e-12));
  CHECK(g.lambda(8) ==
        doctest::Approx(g.lambda(2) * g.lambda(4) - g.lambda(2)).epsilon(1e-12));
  // a(2) = -528: lambda(2) = -528 / 2^{8.5}
  CHECK(g.lambda(2) == doctest::Approx(-528.0 / std::pow(2.0, 8.5)).epsilon(1e-14));
}

TEST_CASE("shimura correspondence: half-integral eigenvalues match g18") {
  auto f = builtin_form("f19/2", 13 * 13 * 11 + 10);
  auto g = eigenform("g18", 200);
  for (int64_t p : {2, 3, 5, 7, 11, 13}) {
    double lam_f = lambda_extract(f, p);
    CHECK(std::fabs(lam_f - g.lambda(p)) < 1e-9);
  }
}

TEST_CASE("shimura correspondence for f23/2 and g22") {
  auto f = builtin_form("f23/2", 7 * 7 * 15 + 10);
  auto g = eigenform("g22", 100);
  for (int64_t p : {2, 3, 5, 7}) {
    double lam_f = lambda_extract(f, p);
    CHECK(std::fabs(lam_f - g.lambda(p)) < 1e-9);
  }
}

TEST_CASE("dirichlet L(1) worked values and class number round trip") {
  CHECK(dirichlet_L1(-4) == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
  CHECK(dirichlet_L1(-3) == doctest::Approx(M_PI / std::sqrt(27.0)).epsilon(1e-12));
  CHECK(dirichlet_L1(-23) ==
        doctest::Approx(3.0 * M_PI / std::sqrt(23.0 * 23.0 * 23.0) * 23.0)
            .epsilon(1e-12));  // 3 pi / 23^{1/2} ... h=3, w=2
  CHECK_THROWS(dirichlet_L1(-12));
  CHECK_THROWS(dirichlet_L1(5));
  for (int64_t q = 3; q <= 400; ++q) {
    if (!is_fundamental(-q)) continue;
    CHECK(class_number_from_L1(-q) == class_group(-q).h());
  }
}

TEST_CASE("afe weight: contour and closed form agree") {
  auto g = eigenform("g18", 100);
  for (int chi2 : {-1, 1}) {
    for (double xi : {0.05, 0.3, 1.2}) {
      double w = afe_weight(g, chi2, xi);
      double wc1 = afe_weight_contour(g, chi2, xi, 1.0);
      double wc2 = afe_weight_contour(g, chi2, xi, 1.5);
      CHECK(std::fabs(wc1 - wc2) < 1e-6);
      CHECK(std::fabs(w - wc1) < 1e-6);
    }
  }
  // W decays: large xi kills the weight
  CHECK(std::fabs(afe_weight(eigenform("g18", 10), 1, 50.0)) < 1e-12);
}

TEST_CASE("central twisted values") {
  auto g = eigenform("g18", 3000);
  auto L23 = central_value_twist(g, -23);
  CHECK(L23.value > -1e-6);  // nonnegativity
  CHECK(L23.est_error < 1e-8);
  CHECK(L23.method == "afe-incgamma");
  // stability under enlarging the eigenvalue table (sanity: value must
  // not depend on table size beyond the cutoff)
  auto g2 = eigenform("g18", 6000);
  auto L23b = central_value_twist(g2, -23);
  CHECK(L23.value == doctest::Approx(L23b.value).epsilon(1e-14));
  // invalid d
  CHECK_THROWS(central_value_twist(g, -4));   // ≡ 0 mod 4
  CHECK_THROWS(central_value_twist(g, -24));  // not fundamental
  // nonnegativity across a batch of fundamental discriminants
  int checked = 0;
  for (int64_t q = 3; q <= 250 && checked < 40; q += 4) {
    if (!is_fundamental(-q)) continue;
    auto L = central_value_twist(g, -q);
    CHECK(L.value > -1e-6);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("waldspurger ratios are flat across twists") {
  auto f = builtin_form("f19/2", 600);
  auto g = eigenform("g18", 7000);
  std::vector<int64_t> ns;
  for (int64_t n = 3; n <= 500 && ns.size() < 12; n += 4)
    if (is_fundamental(-n) && f.raw(n) != 0) ns.push_back(n);
  REQUIRE(ns.size() >= 8);
  for (size_t i = 1; i < ns.size(); ++i)
    CHECK(waldspurger_pair_deviation(f, g, ns[0], ns[i]) < 1e-4);
  CHECK_THROWS(waldspurger_pair_deviation(f, g, 4, 23));
}

TEST_CASE("symmetric square at 1: product vs smoothed series") {
  auto g = eigenform("g18", 100000);
  auto L = sym2_L_at_1(g, 100000);
  CHECK(L.value > 0);
  double alt = sym2_L_at_1_series(g, 2500.0);
  CHECK(std::fabs(L.value - alt) / L.value < 1e-3);
  CHECK(L.method == "euler-product");
}
