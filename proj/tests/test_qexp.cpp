#include "fc/qexp.hpp"

#include "doctest.h"

using namespace fc;

TEST_CASE("tau values") {
  auto tau = delta_coeffs(5000);
  CHECK(tau[1] == 1);
  CHECK(tau[2] == -24);
  CHECK(tau[3] == 252);
  CHECK(tau[4] == -1472);
  CHECK(tau[5] == 4830);
  CHECK(tau[6] == -6048);
  CHECK(tau[7] == -16744);
  CHECK(tau[10] == -115920);
  CHECK(tau[12] == -370944);
  CHECK(tau[24] == mpz_class("21288960"));  // tau(8) * tau(3)
  CHECK(tau[100] == mpz_class("37534859200"));  // tau(4) * tau(25)
  // multiplicativity and Hecke recursion at p = 2, 3, 5
  for (int64_t p : {2, 3, 5, 7}) {
    mpz_class p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
    for (int64_t n = 2; p * p * n <= 5000; ++n) {
      if (n % p == 0) continue;
      CHECK(tau[static_cast<size_t>(p) * static_cast<size_t>(n)] ==
            tau[static_cast<size_t>(p)] * tau[static_cast<size_t>(n)]);
      CHECK(tau[static_cast<size_t>(p * p * n)] ==
            tau[static_cast<size_t>(p)] * tau[static_cast<size_t>(p * n)] -
                p11 * tau[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("eisenstein coefficients") {
  auto e4 = eisenstein_coeffs(4, 50);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  CHECK(e4[3] == 6720);
  auto e6 = eisenstein_coeffs(6, 50);
  CHECK(e6[0] == 1);
  CHECK(e6[1] == -504);
  CHECK(e6[2] == -16632);
  auto e8 = eisenstein_coeffs(8, 50);
  CHECK(e8[0] == 1);
  CHECK(e8[1] == 480);
  auto e10 = eisenstein_coeffs(10, 50);
  CHECK(e10[1] == -264);
  CHECK_THROWS(eisenstein_coeffs(5, 10));
}

TEST_CASE("ring identities among Eisenstein series") {
  // E4^2 = E8 and E4 * E6 = E10 as q-expansions.
  const int64_t X = 120;
  auto E4 = eisenstein_qexp(4, X);
  auto E6 = eisenstein_qexp(6, X);
  auto E8 = eisenstein_qexp(8, X);
  auto E10 = eisenstein_qexp(10, X);
  auto sq = E4 * E4;
  auto pr = E4 * E6;
  for (int64_t n = 0; n <= X; ++n) {
    CHECK(sq.coeff(n) == E8.coeff(n));
    CHECK(pr.coeff(n) == E10.coeff(n));
  }
  // Delta = (E4^3 - E6^2) / 1728.
  auto d = delta_qexp(X);
  auto num = E4 * E4 * E4 - E6 * E6;
  for (int64_t n = 0; n <= X; ++n)
    CHECK(num.coeff(n) == d.coeff(n) * 1728);
}

TEST_CASE("sigma series") {
  auto s1 = sigma_series(1, 12);
  CHECK(s1[6] == 12);
  CHECK(s1[12] == 28);
  auto s3 = sigma_series(3, 10);
  CHECK(s3[1] == 1);
  CHECK(s3[2] == 9);
  CHECK(s3[6] == 252);
}

TEST_CASE("qexp arithmetic guards") {
  auto E4 = eisenstein_qexp(4, 10);
  auto E6 = eisenstein_qexp(6, 10);
  CHECK_THROWS(E4 + E6);
  auto s = E4.scaled(mpq_class(1, 2));
  CHECK(s.coeff(1) == 120);
}
