#include "fc/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace fc {

std::vector<int64_t> primes_up_to(int64_t n) {
  std::vector<int64_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
  for (int64_t p = 2; p <= n; ++p) {
    if (comp[static_cast<size_t>(p)]) continue;
    out.push_back(p);
    for (int64_t q = p * p; q <= n; q += p) comp[static_cast<size_t>(q)] = true;
  }
  return out;
}

std::vector<int32_t> spf_table(int32_t n) {
  std::vector<int32_t> spf(static_cast<size_t>(n) + 1, 0);
  for (int64_t p = 2; p <= n; ++p) {
    if (spf[static_cast<size_t>(p)] != 0) continue;
    for (int64_t q = p; q <= n; q += p) {
      if (spf[static_cast<size_t>(q)] == 0)
        spf[static_cast<size_t>(q)] = static_cast<int32_t>(p);
    }
  }
  return spf;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int moebius(int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
  int k = 0;
  for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++k;
  }
  if (n > 1) ++k;
  return (k & 1) ? -1 : 1;
}

int omega(int64_t n) { return static_cast<int>(factorize(n).size()); }

int big_omega(int64_t n) {
  int s = 0;
  for (auto& [p, e] : factorize(n)) s += e;
  return s;
}

bool is_squarefree(int64_t n) { return moebius(n) != 0; }

int kronecker(int64_t a, int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Pull the 2-part out of n: (a|2) is 0 for even a, else +1 when
  // a ≡ ±1 (mod 8) and -1 when a ≡ ±3 (mod 8).
  while ((n & 1) == 0) {
    n >>= 1;
    int64_t r = ((a % 8) + 8) % 8;
    if (r == 0 || r == 2 || r == 4 || r == 6) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol for odd n > 0 via quadratic reciprocity.
  a = ((a % n) + n) % n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
    a %= n;
  }
  return (n == 1) ? result : 0;
}

bool is_fundamental(int64_t d, bool allow_one) {
  if (d == 1) return allow_one;
  if (d == 0) return false;
  int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(std::llabs(d));
  if (r != 0) return false;
  int64_t m = d / 4;
  int64_t rm = ((m % 4) + 4) % 4;
  if (rm != 2 && rm != 3) return false;
  return is_squarefree(std::llabs(m));
}

int64_t gcd64(int64_t a, int64_t b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

int64_t isqrt64(int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative input");
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                     19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit n.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                     19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<int64_t> primes_by_form(int64_t a, int64_t b, int64_t c,
                                    int64_t X) {
  int64_t disc = b * b - 4 * a * c;
  if (a <= 0 || disc >= 0)
    throw std::invalid_argument("primes_by_form: form must be positive definite");
  if (X < 2) return {};
  // For Q(x,y) <= X: 4aQ = (2ax+by)^2 + |disc| y^2, so
  // |y| <= sqrt(4aX/|disc|), and symmetrically |x| <= sqrt(4cX/|disc|).
  int64_t D = -disc;
  int64_t ybound = isqrt64(4 * a * X / D);
  int64_t xbound = isqrt64(4 * c * X / D);
  std::vector<bool> hit(static_cast<size_t>(X) + 1, false);
  for (int64_t x = -xbound; x <= xbound; ++x) {
    for (int64_t y = -ybound; y <= ybound; ++y) {
      int64_t v = a * x * x + b * x * y + c * y * y;
      if (v >= 2 && v <= X) hit[static_cast<size_t>(v)] = true;
    }
  }
  std::vector<int64_t> out;
  for (int64_t p : primes_up_to(X))
    if (hit[static_cast<size_t>(p)]) out.push_back(p);
  return out;
}

}  // namespace fc
