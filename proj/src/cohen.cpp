#include "fc/cohen.hpp"

#include <cstdlib>
#include <stdexcept>

#include "fc/arith.hpp"
#include "fc/parallel.hpp"

namespace fc {

mpq_class bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: n >= 0");
  static std::vector<mpq_class> cache{mpq_class(1)};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    mpq_class s(0);
    mpz_class binom(1);  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      s += mpq_class(binom) * cache[static_cast<size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    // binom is now C(m+1, m) = m+1
    cache.push_back(-s / mpq_class(binom));
  }
  return cache[static_cast<size_t>(n)];
}

std::vector<mpq_class> bernoulli_poly(int n) {
  // B_n(x) = sum_k C(n, k) B_{n-k} x^k
  std::vector<mpq_class> c(static_cast<size_t>(n) + 1);
  mpz_class binom(1);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<size_t>(k)] = mpq_class(binom) * bernoulli_number(n - k);
    if (k < n) binom = binom * (n - k) / (k + 1);
  }
  return c;
}

mpq_class dirichlet_L_neg(int l, int64_t D0) {
  if (l < 1) throw std::invalid_argument("dirichlet_L_neg: l >= 1");
  if (D0 == 1) {
    if (l == 1) return mpq_class(-1, 2);  // zeta(0)
    return -bernoulli_number(l) / l;      // zeta(1-l)
  }
  if (!is_fundamental(D0))
    throw std::invalid_argument("dirichlet_L_neg: D0 not fundamental");
  int64_t q = std::llabs(D0);
  auto poly = bernoulli_poly(l);
  mpq_class B(0);
  for (int64_t a = 1; a <= q; ++a) {
    int chi = kronecker(D0, a);
    if (chi == 0) continue;
    // B_l(a/q)
    mpq_class x(a, q);
    x.canonicalize();
    mpq_class val(0), pow(1);
    for (int k = 0; k <= l; ++k) {
      val += poly[static_cast<size_t>(k)] * pow;
      pow *= x;
    }
    B += chi * val;
  }
  mpz_class qpow;
  mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(l - 1));
  B *= mpq_class(qpow);
  return -B / l;
}

mpq_class hurwitz_class_number(int64_t N) {
  if (N < 0) throw std::invalid_argument("hurwitz_class_number: N >= 0");
  if (N == 0) return mpq_class(-1, 12);
  int64_t r = N % 4;
  if (r == 1 || r == 2) return mpq_class(0);
  mpq_class H(0);
  for (int64_t a = 1; 3 * a * a <= N + 2; ++a) {
    for (int64_t b = -a; b <= a; ++b) {
      if ((b * b + N) % (4 * a)) continue;
      int64_t c = (b * b + N) / (4 * a);
      if (c < a) continue;
      if ((b == -a || a == c) && b < 0) continue;
      if (a == c && b == a)
        H += mpq_class(1, 3);
      else if (a == c && b == 0)
        H += mpq_class(1, 2);
      else
        H += 1;
    }
  }
  return H;
}

// Decompose D ≡ 0,1 (mod 4), D != 0, as D = D0 * f^2 with D0
// fundamental (or D0 = 1).
static void fundamental_part(int64_t D, int64_t& D0, int64_t& f) {
  int64_t m = 1, g = 1;
  for (auto& [p, e] : factorize(std::llabs(D))) {
    if (e % 2) m *= p;
    for (int i = 0; i < e / 2; ++i) g *= p;
  }
  if (D < 0) m = -m;
  int64_t mr = ((m % 4) + 4) % 4;
  if (mr == 1) {
    D0 = m;
    f = g;
  } else {
    if (g % 2) throw std::logic_error("fundamental_part: bad input");
    D0 = 4 * m;
    f = g / 2;
  }
}

// sum over d | f of mu(d) chi_{D0}(d) d^{l-1} sigma_{2l-1}(f/d)
static mpz_class divisor_factor(int l, int64_t D0, int64_t f) {
  mpz_class s(0);
  for (int64_t d = 1; d <= f; ++d) {
    if (f % d) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    int chi = kronecker(D0, d);
    if (chi == 0) continue;
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(l - 1));
    // sigma_{2l-1}(f/d)
    int64_t q = f / d;
    mpz_class sig(0);
    for (int64_t e = 1; e <= q; ++e) {
      if (q % e) continue;
      mpz_class ep;
      mpz_ui_pow_ui(ep.get_mpz_t(), static_cast<unsigned long>(e),
                    static_cast<unsigned long>(2 * l - 1));
      sig += ep;
    }
    s += mu * chi * dp * sig;
  }
  return s;
}

mpq_class cohen_number(int l, int64_t N) {
  if (l < 1 || N < 0) throw std::invalid_argument("cohen_number: l >= 1, N >= 0");
  if (N == 0) return -bernoulli_number(2 * l) / (2 * l);
  int64_t D = (l % 2 == 0) ? N : -N;
  int64_t Dr = ((D % 4) + 4) % 4;
  if (Dr == 2 || Dr == 3) return mpq_class(0);
  int64_t D0, f;
  fundamental_part(D, D0, f);
  return dirichlet_L_neg(l, D0) * mpq_class(divisor_factor(l, D0, f));
}

static mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  mpz_class r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u & 0xffffffffffffffffull);
  return neg ? mpz_class(-r) : r;
}

CohenTables cohen_tables_35(int64_t X, int threads) {
  CohenTables T;
  T.h3.assign(static_cast<size_t>(X) + 1, mpq_class(0));
  T.h5.assign(static_cast<size_t>(X) + 1, mpq_class(0));
  if (X >= 0) {
    T.h3[0] = mpq_class(-1, 252);  // zeta(-5)
    T.h5[0] = mpq_class(-1, 132);  // zeta(-9)
  }
  auto spf = spf_table(static_cast<int32_t>(std::max<int64_t>(X, 2)));
  std::vector<int64_t> bases;  // |D0| for negative fundamental D0
  for (int64_t q = 3; q <= X; ++q)
    if (is_fundamental(-q)) bases.push_back(q);

  std::vector<mpq_class> L3(bases.size()), L5(bases.size());
  parallel_blocks(static_cast<int64_t>(bases.size()), threads,
                  [&](int64_t lo, int64_t hi) {
    std::vector<int8_t> chi;
    for (int64_t idx = lo; idx < hi; ++idx) {
      int64_t q = bases[static_cast<size_t>(idx)];
      int64_t D0 = -q;
      chi.assign(static_cast<size_t>(q), 0);
      if (q > 1) chi[1] = 1;
      __int128 S1 = 0, S2 = 0, S3 = 0, S4 = 0, S5 = 0;
      for (int64_t a = 2; a < q; ++a) {
        int64_t p = spf[static_cast<size_t>(a)];
        int8_t c;
        if (a == p)
          c = static_cast<int8_t>(kronecker(D0, p));
        else
          c = static_cast<int8_t>(chi[static_cast<size_t>(p)] *
                                  chi[static_cast<size_t>(a / p)]);
        chi[static_cast<size_t>(a)] = c;
      }
      for (int64_t a = 1; a < q; ++a) {
        int c = chi[static_cast<size_t>(a)];
        if (c == 0) continue;
        __int128 a1 = a;
        __int128 a2 = a1 * a;
        __int128 a3 = a2 * a;
        __int128 a4 = a2 * a2;
        __int128 a5 = a4 * a;
        if (c > 0) {
          S1 += a1; S2 += a2; S3 += a3; S4 += a4; S5 += a5;
        } else {
          S1 -= a1; S2 -= a2; S3 -= a3; S4 -= a4; S5 -= a5;
        }
      }
      mpq_class s1(mpz_from_i128(S1)), s2(mpz_from_i128(S2)),
          s3(mpz_from_i128(S3)), s4(mpz_from_i128(S4)), s5(mpz_from_i128(S5));
      mpq_class Q(q);
      // B_{3,chi} = S3/q - (3/2) S2 + (q/2) S1
      mpq_class B3 = s3 / Q - mpq_class(3, 2) * s2 + Q / 2 * s1;
      // B_{5,chi} = S5/q - (5/2) S4 + (5/3) q S3 - (1/6) q^3 S1
      mpq_class B5 = s5 / Q - mpq_class(5, 2) * s4 + mpq_class(5, 3) * Q * s3 -
                     mpq_class(1, 6) * Q * Q * Q * s1;
      L3[static_cast<size_t>(idx)] = -B3 / 3;
      L5[static_cast<size_t>(idx)] = -B5 / 5;
    }
  });

  for (size_t idx = 0; idx < bases.size(); ++idx) {
    int64_t q = bases[idx];
    for (int64_t f = 1; q * f * f <= X; ++f) {
      int64_t N = q * f * f;
      T.h3[static_cast<size_t>(N)] = L3[idx] * mpq_class(divisor_factor(3, -q, f));
      T.h5[static_cast<size_t>(N)] = L5[idx] * mpq_class(divisor_factor(5, -q, f));
    }
  }
  return T;
}

}  // namespace fc
