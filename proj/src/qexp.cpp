#include "fc/qexp.hpp"

#include <stdexcept>

namespace fc {

const mpq_class& QExpansion::coeff(int64_t n) const {
  static const mpq_class zero(0);
  if (n < 0 || n >= size()) return zero;
  return a[static_cast<size_t>(n)];
}

QExpansion QExpansion::operator+(const QExpansion& o) const {
  if (weight != o.weight || level != o.level)
    throw std::invalid_argument("QExpansion: weight/level mismatch in sum");
  QExpansion r{weight, level, {}};
  size_t n = std::min(a.size(), o.a.size());
  r.a.resize(n);
  for (size_t i = 0; i < n; ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

QExpansion QExpansion::operator-(const QExpansion& o) const {
  if (weight != o.weight || level != o.level)
    throw std::invalid_argument("QExpansion: weight/level mismatch in difference");
  QExpansion r{weight, level, {}};
  size_t n = std::min(a.size(), o.a.size());
  r.a.resize(n);
  for (size_t i = 0; i < n; ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

QExpansion QExpansion::operator*(const QExpansion& o) const {
  if (level != o.level)
    throw std::invalid_argument("QExpansion: level mismatch in product");
  QExpansion r{weight + o.weight, level, {}};
  size_t n = std::min(a.size(), o.a.size());
  r.a.assign(n, mpq_class(0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) {
      if (o.a[j] == 0) continue;
      r.a[i + j] += a[i] * o.a[j];
    }
  }
  return r;
}

QExpansion QExpansion::scaled(const mpq_class& s) const {
  QExpansion r{weight, level, a};
  for (auto& x : r.a) x *= s;
  return r;
}

std::vector<mpz_class> sigma_series(int j, int64_t X) {
  std::vector<mpz_class> s(static_cast<size_t>(X) + 1, 0);
  for (int64_t d = 1; d <= X; ++d) {
    mpz_class dj;
    mpz_ui_pow_ui(dj.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(j));
    for (int64_t m = d; m <= X; m += d) s[static_cast<size_t>(m)] += dj;
  }
  return s;
}

std::vector<mpz_class> eta3_coeffs(int64_t X) {
  std::vector<mpz_class> e(static_cast<size_t>(X) + 1, 0);
  for (int64_t k = 0;; ++k) {
    int64_t t = k * (k + 1) / 2;
    if (t > X) break;
    e[static_cast<size_t>(t)] = (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1);
  }
  return e;
}

// Multiply a dense series by the sparse eta^3 series, truncated at X.
static std::vector<mpz_class> mul_eta3(const std::vector<mpz_class>& f,
                                       int64_t X) {
  std::vector<mpz_class> r(static_cast<size_t>(X) + 1, 0);
  for (int64_t k = 0;; ++k) {
    int64_t t = k * (k + 1) / 2;
    if (t > X) break;
    int64_t c = (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1);
    for (int64_t n = 0; n + t <= X && n < static_cast<int64_t>(f.size());
         ++n) {
      if (f[static_cast<size_t>(n)] == 0) continue;
      if (c > 0)
        mpz_addmul_ui(r[static_cast<size_t>(n + t)].get_mpz_t(),
                      f[static_cast<size_t>(n)].get_mpz_t(),
                      static_cast<unsigned long>(c));
      else
        mpz_submul_ui(r[static_cast<size_t>(n + t)].get_mpz_t(),
                      f[static_cast<size_t>(n)].get_mpz_t(),
                      static_cast<unsigned long>(-c));
    }
  }
  return r;
}

std::vector<mpz_class> delta_coeffs(int64_t X) {
  // Delta = q * (eta^3 series)^8; build the 8th power by squaring the
  // sparse series once (dense result) then six further sparse passes.
  if (X < 1) return std::vector<mpz_class>(static_cast<size_t>(X) + 1, 0);
  int64_t Y = X - 1;  // shift by q
  auto e = eta3_coeffs(Y);
  std::vector<mpz_class> p2(static_cast<size_t>(Y) + 1, 0);
  for (int64_t i = 0; i * (i + 1) / 2 <= Y; ++i) {
    int64_t ti = i * (i + 1) / 2;
    int64_t ci = (i % 2 == 0) ? (2 * i + 1) : -(2 * i + 1);
    for (int64_t j = 0; ti + j * (j + 1) / 2 <= Y; ++j) {
      int64_t tj = j * (j + 1) / 2;
      int64_t cj = (j % 2 == 0) ? (2 * j + 1) : -(2 * j + 1);
      p2[static_cast<size_t>(ti + tj)] += ci * cj;
    }
  }
  auto acc = p2;
  for (int pass = 0; pass < 6; ++pass) acc = mul_eta3(acc, Y);
  std::vector<mpz_class> tau(static_cast<size_t>(X) + 1, 0);
  for (int64_t n = 0; n <= Y; ++n)
    tau[static_cast<size_t>(n + 1)] = acc[static_cast<size_t>(n)];
  return tau;
}

std::vector<mpz_class> eisenstein_coeffs(int k, int64_t X) {
  long c;
  switch (k) {
    case 4: c = 240; break;
    case 6: c = -504; break;
    case 8: c = 480; break;
    case 10: c = -264; break;
    default:
      throw std::invalid_argument("eisenstein_coeffs: k must be 4, 6, 8 or 10");
  }
  auto s = sigma_series(k - 1, X);
  std::vector<mpz_class> e(static_cast<size_t>(X) + 1, 0);
  e[0] = 1;
  for (int64_t n = 1; n <= X; ++n) e[static_cast<size_t>(n)] = c * s[static_cast<size_t>(n)];
  return e;
}

QExpansion delta_qexp(int64_t X) {
  QExpansion f{12, 1, {}};
  auto t = delta_coeffs(X);
  f.a.assign(t.begin(), t.end());
  return f;
}

QExpansion eisenstein_qexp(int k, int64_t X) {
  QExpansion f{k, 1, {}};
  auto t = eisenstein_coeffs(k, X);
  f.a.assign(t.begin(), t.end());
  return f;
}

}  // namespace fc
