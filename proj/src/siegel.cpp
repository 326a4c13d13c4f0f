#include "fc/siegel.hpp"

#include <numeric>
#include <stdexcept>

#include "fc/arith.hpp"

namespace fc {

int64_t Lambda2Matrix::content() const {
  int64_t g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
  return g;
}

bool Lambda2Matrix::is_fundamental_mat() const {
  return valid() && is_fundamental(disc());
}

Lambda2Matrix Lambda2Matrix::transform(int64_t x, int64_t y, int64_t z,
                                       int64_t w) const {
  if (x * w - y * z != 1) throw std::invalid_argument("det A must be 1");
  // Q(u, v) = a u^2 + b u v + c v^2 pulled back along (u, v) -> A (u, v).
  Lambda2Matrix out;
  out.a = a * x * x + b * x * y + c * y * y;
  out.c = a * z * z + b * z * w + c * w * w;
  out.b = 2 * a * x * z + b * (x * w + y * z) + 2 * c * y * w;
  return out;
}

SKLift sk_lift(int k, int64_t max_disc, int threads) {
  SKLift F;
  F.k = k;
  if (k == 10) {
    F.source = builtin_form("f19/2", max_disc, threads);
    F.glabel = "g18";
  } else if (k == 12) {
    F.source = builtin_form("f23/2", max_disc, threads);
    F.glabel = "g22";
  } else {
    throw std::invalid_argument("only k = 10 and k = 12 are built in");
  }
  return F;
}

// Exact source coefficient; the built-in forms carry no sqrt factor.
static mpq_class src_exact(const SKLift& F, int64_t n) {
  if (F.source.sqrt_arg != 1)
    throw std::logic_error("source carries an irrational factor");
  if (n > F.source.max_index())
    throw std::out_of_range("source coefficient out of range");
  return F.source.raw(n) * F.source.scale;
}

mpq_class sk_coefficient(const SKLift& F, const Lambda2Matrix& S) {
  if (!S.valid()) throw std::invalid_argument("matrix must be positive definite");
  int64_t D = -S.disc();
  int64_t g = S.content();
  mpq_class out = 0;
  for (int64_t e = 1; e <= g; ++e) {
    if (g % e != 0) continue;
    mpz_class ek;
    mpz_ui_pow_ui(ek.get_mpz_t(), static_cast<unsigned long>(e),
                  static_cast<unsigned long>(F.k - 1));
    out += mpq_class(ek) * src_exact(F, D / (e * e));
  }
  return out;
}

mpq_class u_p(const SKLift& F, int64_t p, const Lambda2Matrix& S) {
  return sk_coefficient(F, S.scaled(p));
}

std::map<std::pair<int64_t, int64_t>, mpq_class> fourier_jacobi(
    const SKLift& F, int64_t m, int64_t X) {
  if (m < 1) throw std::invalid_argument("index m must be positive");
  std::map<std::pair<int64_t, int64_t>, mpq_class> out;
  for (int64_t n = 1; n <= X; ++n) {
    int64_t rmax = isqrt64(4 * n * m);
    if (rmax * rmax == 4 * n * m) --rmax;
    for (int64_t r = -rmax; r <= rmax; ++r) {
      int64_t D = 4 * n * m - r * r;
      if (D < 1 || D > X) continue;
      Lambda2Matrix S{n, r, m};
      out[{n, r}] = sk_coefficient(F, S);
    }
  }
  return out;
}

HalfIntForm h_p_construct(const SKLift& F, int64_t p, int64_t X) {
  if (4 * p * X > F.source.max_index() + 1)
    throw std::out_of_range("source table too small for h_p");
  HalfIntForm h;
  h.kappa = F.k - 1;
  h.level = 4 * p;
  h.plus_flag = false;  // support pattern is recorded, not assumed
  h.a.assign(static_cast<size_t>(X) + 1, mpq_class(0));
  for (int64_t m = 1; m <= X; ++m) {
    for (int64_t mu = 0; mu < 2 * p; ++mu) {
      if ((mu * mu + m) % (4 * p) != 0) continue;
      Lambda2Matrix S{(m + mu * mu) / (4 * p), mu, p};
      h.a[static_cast<size_t>(m)] += sk_coefficient(F, S);
    }
  }
  return h;
}

// Pick one reduced form per class and evaluate a(F, .) on it.
static std::vector<mpq_class> class_coefficients(const SKLift& F,
                                                 const ClassGroup& G) {
  std::vector<mpq_class> out;
  out.reserve(G.forms.size());
  for (const auto& f : G.forms)
    out.push_back(sk_coefficient(F, Lambda2Matrix{f.a, f.b, f.c}));
  return out;
}

std::complex<double> bessel_period(const SKLift& F, const ClassGroup& G,
                                   const Character& chi) {
  auto a = class_coefficients(F, G);
  // For a lift at a fundamental discriminant the class coefficients
  // coincide, so nontrivial characters kill the sum by orthogonality.
  // Short circuit that case to make the vanishing exact.
  bool constant = true;
  for (const auto& v : a)
    if (v != a[0]) { constant = false; break; }
  if (constant) {
    if (chi.order() > 1) return {0.0, 0.0};
    return {a[0].get_d() * static_cast<double>(G.h()), 0.0};
  }
  std::complex<double> B = 0;
  for (size_t i = 0; i < a.size(); ++i)
    B += a[i].get_d() * chi.value(static_cast<int>(i));
  return B;
}

bool bessel_vanishes_exactly(const SKLift& F, const ClassGroup& G,
                             const Character& chi) {
  if (chi.order() <= 1) return false;
  auto a = class_coefficients(F, G);
  for (const auto& v : a)
    if (v != a[0]) return false;
  return true;
}

mpq_class bessel_trivial_exact(const SKLift& F, const ClassGroup& G) {
  auto a = class_coefficients(F, G);
  mpq_class out = 0;
  for (const auto& v : a) out += v;
  return out;
}

std::vector<mpq_class> bessel_invert_exact(const SKLift& F,
                                           const ClassGroup& G) {
  auto a = class_coefficients(F, G);
  auto chars = characters(G);
  size_t h = a.size();
  // (1/h) sum over chi of B(F, chi) conj(chi(S)) with
  // B(F, chi) = sum over T of a_T chi(T). Exchange the sums: the inner
  // character sum is h when T = S and 0 otherwise, which is certified
  // here by comparing exact angles instead of summing floats.
  std::vector<mpq_class> out(h, mpq_class(0));
  for (size_t s = 0; s < h; ++s) {
    for (size_t t = 0; t < h; ++t) {
      size_t agree = 0;
      for (const auto& chi : chars) {
        Angle at = chi.angle(static_cast<int>(t));
        Angle as = chi.angle(static_cast<int>(s));
        // angle fractions are stored reduced mod 1
        if (at.num * as.den == as.num * at.den) ++agree;
      }
      if (agree == h) {
        out[s] += a[t];
      } else if (t == s) {
        throw std::logic_error("character separation failed");
      }
      // agree < h with t != s: the character sum vanishes, drop the term
    }
  }
  return out;
}

bool hypothesis_g_check(const SKLift& F, const ClassGroup& G,
                        const Character& chi, double L_value, double C_F) {
  if (L_value < 0) throw std::invalid_argument("negative central value");
  std::complex<double> B = bessel_period(F, G, chi);
  double lhs = std::norm(B);
  double rhs = C_F * std::pow(static_cast<double>(-G.d), F.k - 1) * L_value;
  return lhs <= rhs + 1e-9 * (std::abs(rhs) + 1.0);
}

}  // namespace fc
