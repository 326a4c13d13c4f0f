#include "fc/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fc/arith.hpp"

namespace fc {

bool BQF::is_reduced() const {
  if (a <= 0) return false;
  if (std::abs(b) > a || a > c) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

BQF BQF::reduced() const {
  if (a <= 0 || disc() >= 0)
    throw std::invalid_argument("BQF::reduced: form must be positive definite");
  BQF f = *this;
  while (true) {
    // Normalize: bring b into (-a, a].
    if (f.b > f.a || f.b <= -f.a) {
      // b - 2ak in (-a, a] for k = floor((b+a-1)/(2a)) adjusted; use
      // rounding that works for negative b too.
      int64_t twoa = 2 * f.a;
      int64_t k = (f.b + f.a) / twoa;
      if (f.b + f.a < 0 && (f.b + f.a) % twoa != 0) --k;
      int64_t b2 = f.b - twoa * k;
      int64_t c2 = f.c - k * f.b + k * k * f.a;
      f.b = b2;
      f.c = c2;
    }
    if (f.a > f.c) {
      f = BQF{f.c, -f.b, f.a};
      continue;
    }
    break;
  }
  if ((f.b < 0) && (f.a == f.c || f.b == -f.a)) f.b = -f.b;
  return f;
}

std::complex<double> Angle::value() const {
  double t = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

static Angle make_angle(int64_t num, int64_t den) {
  num %= den;
  if (num < 0) num += den;
  int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Angle{num / g, den / g};
}

// Extended gcd: returns g and sets x,y with a*x + b*y = g.
static int64_t extgcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = (a >= 0) ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  int64_t x1, y1;
  int64_t g = extgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Transform f by the unimodular matrix sending (1,0) to (x,y); the
// result has leading coefficient f(x,y) and is properly equivalent.
static BQF transform_to_value(const BQF& f, int64_t x, int64_t y) {
  int64_t z, w;
  int64_t g = extgcd(x, y, w, z);
  if (g != 1) throw std::invalid_argument("transform_to_value: gcd(x,y) != 1");
  // x*w + y*z = 1, so the matrix ((x, -z), (y, w)) has det 1.
  int64_t u = -z, v = w;
  int64_t A = f.eval(x, y);
  int64_t B = 2 * (f.a * x * u + f.c * y * v) + f.b * (x * v + y * u);
  int64_t C = f.eval(u, v);
  return BQF{A, B, C};
}

// Find a value of f, primitively represented, coprime to M; returns an
// equivalent form with that value as leading coefficient.
static BQF represent_coprime(const BQF& f, int64_t M) {
  for (int64_t bound = 1; bound <= 64; ++bound) {
    for (int64_t x = -bound; x <= bound; ++x) {
      for (int64_t y = -bound; y <= bound; ++y) {
        if (std::max(std::llabs(x), std::llabs(y)) != bound && bound > 1)
          continue;
        if (std::gcd(std::llabs(x), std::llabs(y)) != 1) continue;
        int64_t v = f.eval(x, y);
        if (v > 0 && std::gcd(v, std::llabs(M)) == 1)
          return transform_to_value(f, x, y);
      }
    }
  }
  throw std::runtime_error("represent_coprime: no value found");
}

BQF compose_forms(const BQF& f1, const BQF& f2) {
  if (f1.disc() != f2.disc())
    throw std::invalid_argument("compose_forms: discriminants differ");
  int64_t D = f1.disc();
  // Put the forms in concordant shape: coprime leading coefficients
  // and a common middle coefficient.
  BQF g2 = f2;
  BQF g1 = represent_coprime(f1, 2 * g2.a * D);
  int64_t A1 = g1.a, A2 = g2.a;
  // Solve B ≡ g1.b (mod 2*A1), B ≡ g2.b (mod 2*A2). Both are ≡ D mod 2
  // so the system is consistent; gcd(A1, A2) = 1.
  int64_t x, y;
  int64_t g = extgcd(A1 % A2, A2, x, y);
  (void)g;
  int64_t diff = (g2.b - g1.b) / 2;  // both have parity of D
  int64_t t = ((diff % A2) * (x % A2)) % A2;
  __int128 B = static_cast<__int128>(g1.b) + static_cast<__int128>(2 * A1) * t;
  __int128 A = static_cast<__int128>(A1) * A2;
  __int128 Bred = B % (2 * A);
  int64_t Bi = static_cast<int64_t>(Bred);
  int64_t Ai = static_cast<int64_t>(A);
  __int128 num = static_cast<__int128>(Bi) * Bi - D;
  int64_t Ci = static_cast<int64_t>(num / (4 * A));
  if (num % (4 * A) != 0)
    throw std::runtime_error("compose_forms: congruence failure");
  return BQF{Ai, Bi, Ci}.reduced();
}

int ClassGroup::power(int i, int64_t e) const {
  int64_t n = h();
  e %= n;  // exponent of any element divides h
  if (e < 0) e += n;
  int acc = 0;
  int base = i;
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

int ClassGroup::index_of(const BQF& f) const {
  auto it = index_.find(f);
  if (it == index_.end())
    throw std::invalid_argument("ClassGroup::index_of: not a reduced form here");
  return it->second;
}

// Order of class i in the group.
static int64_t class_order(const ClassGroup& G, int i) {
  int64_t n = 1;
  int x = i;
  while (x != 0) {
    x = G.compose(x, i);
    ++n;
  }
  return n;
}

ClassGroup class_group(int64_t d) {
  if (d >= 0 || !is_fundamental(d))
    throw std::invalid_argument(
        "class_group: need a negative fundamental discriminant");
  ClassGroup G;
  G.d = d;
  G.unit_count = (d == -3) ? 6 : (d == -4) ? 4 : 2;

  // Enumerate reduced primitive forms; the principal form goes first.
  int64_t r = ((d % 2) + 2) % 2;
  BQF principal{1, r, (r * r - d) / 4};
  G.forms.push_back(principal);
  int64_t amax = isqrt64(-d / 3);
  for (int64_t a = 1; a <= amax; ++a) {
    for (int64_t b = -a + 1; b <= a; ++b) {
      if (((b * b - d) % (4 * a)) != 0) continue;
      int64_t c = (b * b - d) / (4 * a);
      BQF f{a, b, c};
      if (!f.is_reduced()) continue;
      if (gcd64(gcd64(a, b), c) != 1) continue;
      if (f == principal) continue;
      G.forms.push_back(f);
    }
  }
  int h = static_cast<int>(G.forms.size());
  for (int i = 0; i < h; ++i) G.index_[G.forms[i]] = i;

  G.table_.assign(h, std::vector<int>(h, 0));
  for (int i = 0; i < h; ++i)
    for (int j = i; j < h; ++j) {
      int k = G.index_of(compose_forms(G.forms[i], G.forms[j]));
      G.table_[i][j] = k;
      G.table_[j][i] = k;
    }
  G.inv.resize(h);
  for (int i = 0; i < h; ++i)
    G.inv[i] = G.index_of(BQF{G.forms[i].a, -G.forms[i].b, G.forms[i].c}.reduced());
  for (int i = 0; i < h; ++i)
    if (G.compose(i, G.inv[i]) != 0)
      throw std::runtime_error("class_group: inverse check failed");

  // Structure: for each prime p | h take the p-Sylow subgroup and build
  // a basis greedily by maximal order in the quotient, adjusting each
  // generator so the subgroup splits off as a direct factor.
  struct PBasis {
    std::vector<int> gens;
    std::vector<int64_t> orders;  // descending powers of p
  };
  std::vector<int64_t> orders(h);
  for (int i = 0; i < h; ++i) orders[i] = class_order(G, i);

  std::map<int64_t, PBasis> sylow;
  for (auto& [p, e] : factorize(h)) {
    (void)e;
    std::vector<int> S;
    for (int i = 0; i < h; ++i) {
      int64_t o = orders[i];
      while (o % p == 0) o /= p;
      if (o == 1) S.push_back(i);
    }
    PBasis pb;
    std::map<int, std::vector<int64_t>> coord;  // class -> exponents
    coord[0] = {};
    while (coord.size() < S.size()) {
      // Pick x maximizing its order in the quotient by the current span.
      int best = -1;
      int64_t bestm = 0;
      for (int x : S) {
        if (coord.count(x)) continue;
        int64_t m = 1;
        while (!coord.count(G.power(x, m))) m *= p;
        if (m > bestm) {
          bestm = m;
          best = x;
        }
      }
      // Adjust: find z in the span with z^m = best^m, replace best by
      // best * z^{-1}; then <best'> meets the span trivially.
      int64_t m = bestm;
      int target = G.power(best, m);
      int adjusted = -1;
      for (auto& [z, zc] : coord) {
        (void)zc;
        if (G.power(z, m) == target) {
          int cand = G.compose(best, G.inv[z]);
          if (class_order(G, cand) == m) {
            adjusted = cand;
            break;
          }
        }
      }
      if (adjusted < 0)
        throw std::runtime_error("class_group: basis adjustment failed");
      // Extend the span and coordinates; collisions would mean the sum
      // is not direct.
      std::map<int, std::vector<int64_t>> next = coord;
      for (auto& [g0, c0] : coord) {
        int y = g0;
        for (int64_t j = 1; j < m; ++j) {
          y = G.compose(y, adjusted);
          auto c = c0;
          c.push_back(j);
          if (next.count(y))
            throw std::runtime_error("class_group: span not direct");
          next[y] = c;
        }
      }
      for (auto& [g0, c0] : next)
        if (c0.size() < pb.gens.size() + 1) {
          auto c = c0;
          c.resize(pb.gens.size() + 1, 0);
          next[g0] = c;
        }
      coord = std::move(next);
      pb.gens.push_back(adjusted);
      pb.orders.push_back(m);
    }
    sylow[p] = pb;
  }

  // Merge Sylow bases into invariant factors d1 | d2 | ... | dr by
  // aligning the largest orders together, then listing ascending.
  size_t rmax = 0;
  for (auto& [p, pb] : sylow) rmax = std::max(rmax, pb.gens.size());
  std::vector<int64_t> dfac(rmax, 1);
  std::vector<int> gens(rmax, 0);
  for (auto& [p, pb] : sylow) {
    (void)p;
    for (size_t j = 0; j < pb.gens.size(); ++j) {
      dfac[j] *= pb.orders[j];
      gens[j] = G.compose(gens[j], pb.gens[j]);
    }
  }
  std::reverse(dfac.begin(), dfac.end());
  std::reverse(gens.begin(), gens.end());
  G.cyclic_orders = dfac;
  G.generators = gens;

  // Coordinates of every class, by enumerating all products of the
  // generators; this also certifies the decomposition.
  G.coords.assign(h, {});
  std::vector<int64_t> e(rmax, 0);
  int assigned = 0;
  while (true) {
    int cls = 0;
    for (size_t j = 0; j < rmax; ++j)
      cls = G.compose(cls, G.power(gens[j], e[j]));
    if (!G.coords[cls].empty() && !(cls == 0 && rmax == 0))
      throw std::runtime_error("class_group: coordinate collision");
    G.coords[cls] = e;
    ++assigned;
    size_t j = 0;
    while (j < rmax && ++e[j] == dfac[j]) {
      e[j] = 0;
      ++j;
    }
    if (j == rmax) break;
  }
  if (assigned != h) throw std::runtime_error("class_group: structure mismatch");
  return G;
}

Character::Character(const ClassGroup& G, std::vector<int64_t> t)
    : G_(&G), t_(std::move(t)) {
  if (t_.size() != G.cyclic_orders.size())
    throw std::invalid_argument("Character: exponent tuple size mismatch");
  for (size_t j = 0; j < t_.size(); ++j) {
    t_[j] %= G.cyclic_orders[j];
    if (t_[j] < 0) t_[j] += G.cyclic_orders[j];
  }
}

Angle Character::angle(int cls) const {
  // Sum of t_j * e_j / d_j as an exact rational mod 1.
  const auto& e = G_->coords[cls];
  int64_t num = 0, den = 1;
  for (size_t j = 0; j < t_.size(); ++j) {
    int64_t dj = G_->cyclic_orders[j];
    int64_t nj = (t_[j] * e[j]) % dj;
    // num/den + nj/dj
    int64_t g = std::gcd(den, dj);
    int64_t nden = den / g * dj;
    num = num * (dj / g) + nj * (den / g);
    den = nden;
    num %= den;
  }
  return make_angle(num, den);
}

bool Character::is_trivial() const {
  for (auto t : t_)
    if (t != 0) return false;
  return true;
}

int64_t Character::order() const {
  int64_t o = 1;
  for (size_t j = 0; j < t_.size(); ++j) {
    int64_t dj = G_->cyclic_orders[j];
    int64_t oj = dj / std::gcd(t_[j], dj);
    o = std::lcm(o, oj);
  }
  return o;
}

Character Character::squared() const {
  auto t = t_;
  for (auto& x : t) x *= 2;
  return Character(*G_, t);
}

Character Character::conjugate() const {
  auto t = t_;
  for (auto& x : t) x = -x;
  return Character(*G_, t);
}

std::vector<Character> characters(const ClassGroup& G) {
  std::vector<Character> out;
  size_t r = G.cyclic_orders.size();
  std::vector<int64_t> t(r, 0);
  while (true) {
    out.emplace_back(G, t);
    size_t j = 0;
    while (j < r && ++t[j] == G.cyclic_orders[j]) {
      t[j] = 0;
      ++j;
    }
    if (j == r) break;
  }
  return out;
}

PrimeIdealClass prime_ideal_class(const ClassGroup& G, int64_t p) {
  if (p < 2 || !is_prime64(static_cast<uint64_t>(p)))
    throw std::invalid_argument("prime_ideal_class: p must be prime");
  int k = kronecker(G.d, p);
  PrimeIdealClass out;
  if (k == -1) {
    out.type = SplitType::inert;
    out.cls = 0;
    out.bp = 0;
    return out;
  }
  out.type = (k == 0) ? SplitType::ramified : SplitType::split;
  for (int64_t b = 0; b < 2 * p; ++b) {
    if (((b * b - G.d) % (4 * p)) == 0) {
      out.bp = b;
      int64_t c = (b * b - G.d) / (4 * p);
      out.cls = G.index_of(BQF{p, b, c}.reduced());
      return out;
    }
  }
  throw std::runtime_error("prime_ideal_class: no square root found");
}

std::vector<std::complex<double>> theta_coeffs(const ClassGroup& G,
                                               const Character& chi,
                                               int64_t X) {
  std::vector<std::complex<double>> r(static_cast<size_t>(X) + 1, 0.0);
  if (X < 1) return r;
  r[1] = 1.0;
  auto spf = spf_table(static_cast<int32_t>(X));
  // Local factors at prime powers, computed on demand.
  std::map<int64_t, std::vector<std::complex<double>>> local;
  auto local_val = [&](int64_t p, int j) -> std::complex<double> {
    auto& vec = local[p];
    if (vec.empty()) vec.push_back(1.0);
    while (static_cast<int>(vec.size()) <= j) {
      int jj = static_cast<int>(vec.size());
      auto pic = prime_ideal_class(G, p);
      std::complex<double> v = 0.0;
      if (pic.type == SplitType::inert) {
        v = (jj % 2 == 0) ? 1.0 : 0.0;
      } else if (pic.type == SplitType::ramified) {
        // A ramified class has order dividing 2 so this is ±1.
        std::complex<double> cv = chi.value(pic.cls);
        v = 1.0;
        for (int i = 0; i < jj; ++i) v *= cv;
      } else {
        std::complex<double> cp = chi.value(pic.cls);
        std::complex<double> cq = chi.value(G.inv[pic.cls]);
        std::complex<double> s = 0.0;
        for (int i = 0; i <= jj; ++i)
          s += std::pow(cp, i) * std::pow(cq, jj - i);
        v = s;
      }
      vec.push_back(v);
    }
    return vec[static_cast<size_t>(j)];
  };
  for (int64_t n = 2; n <= X; ++n) {
    int64_t m = n;
    std::complex<double> v = 1.0;
    while (m > 1) {
      int64_t p = spf[static_cast<size_t>(m)];
      int j = 0;
      while (m % p == 0) {
        m /= p;
        ++j;
      }
      v *= local_val(p, j);
    }
    r[static_cast<size_t>(n)] = v;
  }
  return r;
}

AIParams ai_satake(const ClassGroup& G, const Character& chi, int64_t p) {
  auto pic = prime_ideal_class(G, p);
  AIParams out;
  out.type = pic.type;
  if (pic.type == SplitType::inert) {
    out.alpha = 1.0;
    out.beta = -1.0;
  } else if (pic.type == SplitType::ramified) {
    out.alpha = chi.value(pic.cls);
    out.beta = 0.0;
  } else {
    out.alpha = chi.value(pic.cls);
    out.beta = chi.value(G.inv[pic.cls]);
  }
  return out;
}

}  // namespace fc
