#include "fc/stats.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fc/arith.hpp"

namespace fc {

bool CoeffSeries::masked(int64_t n) const {
  if (n < 1 || n > max_index()) return false;
  if (mask_odd && n % 2 == 0) return false;
  if (mask_squarefree && !is_squarefree(n)) return false;
  if (mask_coprime && gcd64(n, N) != 1) return false;
  return true;
}

CoeffSeries series_from_halfint(const HalfIntForm& f) {
  CoeffSeries s;
  s.N = f.level / 4;
  if (s.N == 0) s.N = 1;
  s.c.assign(f.a.size(), 0);
  for (int64_t n = 1; n <= f.max_index(); ++n)
    s.c[static_cast<size_t>(n)] = f.c(n);
  return s;
}

CoeffSeries series_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::pair<int64_t, double>> rows;
  int64_t maxn = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int64_t n;
    char comma;
    double v;
    if (!(ls >> n >> comma >> v) || comma != ',' || n < 1)
      throw std::runtime_error("malformed csv line: " + line);
    rows.push_back({n, v});
    maxn = std::max(maxn, n);
  }
  CoeffSeries s;
  s.c.assign(static_cast<size_t>(maxn) + 1, 0);
  for (auto& [n, v] : rows) s.c[static_cast<size_t>(n)] = v;
  return s;
}

double weight_W(double u, double k) {
  if (u <= 0) throw std::invalid_argument("u must be positive");
  return std::pow(u, (k - 0.5) / 2) * std::exp(-2 * M_PI * u);
}

SignChangeResult sign_changes(const CoeffSeries& s, int64_t X, int64_t MX) {
  SignChangeResult out;
  int64_t prev_n = 0;
  double prev = 0;
  for (int64_t n = X; n <= MX && n <= s.max_index(); ++n) {
    if (!s.masked(n)) continue;
    double v = s.c[static_cast<size_t>(n)];
    if (v == 0) continue;
    if (prev != 0 && prev * v < 0) {
      ++out.count;
      out.pairs.push_back({prev_n, n});
    }
    prev = v;
    prev_n = n;
  }
  return out;
}

IntervalSums short_interval_sums(const CoeffSeries& s, int64_t x, int64_t y) {
  if (x + y > s.max_index())
    throw std::out_of_range("interval exceeds the stored range");
  // compensated sums
  double sum = 0, csum = 0, abs_sum = 0, cabs = 0;
  for (int64_t n = x; n <= x + y; ++n) {
    if (!s.masked(n)) continue;
    double v = s.c[static_cast<size_t>(n)];
    double t = sum + v;
    csum += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
    double a = std::abs(v);
    double t2 = abs_sum + a;
    cabs += abs_sum >= a ? (abs_sum - t2) + a : (a - t2) + abs_sum;
    abs_sum = t2;
  }
  IntervalSums out;
  out.abs_of_sum = std::abs(sum + csum);
  out.sum_of_abs = abs_sum + cabs;
  out.certifies_flip = out.abs_of_sum < out.sum_of_abs;
  return out;
}

double moment_sums(const CoeffSeries& s, int64_t X, int64_t MX, int power) {
  if (power != 2 && power != 4) throw std::invalid_argument("power is 2 or 4");
  double sum = 0, comp = 0;
  for (int64_t n = X; n <= MX && n <= s.max_index(); ++n) {
    if (!s.masked(n)) continue;
    double v = std::abs(s.c[static_cast<size_t>(n)]);
    double term = power == 2 ? v * v : v * v * v * v;
    double t = sum + term;
    comp += sum >= term ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double large_value_threshold(int64_t n) {
  if (n < 16) throw std::invalid_argument("n too small for the threshold");
  double ln = std::log(static_cast<double>(n));
  return std::exp(std::sqrt(ln / std::log(ln)) / 82.0);
}

std::vector<int64_t> large_values(const CoeffSeries& s, int64_t X,
                                  int64_t X2) {
  std::vector<int64_t> out;
  for (int64_t n = X; n <= X2 && n <= s.max_index(); ++n) {
    if (!s.masked(n)) continue;
    if (std::abs(s.c[static_cast<size_t>(n)]) >= large_value_threshold(n))
      out.push_back(n);
  }
  return out;
}

std::complex<double> shifted_convolution(const CoeffSeries& s, int64_t h,
                                         int64_t v, int64_t r, double X,
                                         double k) {
  if (h == 0) throw std::invalid_argument("h = 0 is the diagonal moment");
  if (static_cast<double>(h) * h >= X)
    throw std::invalid_argument("|h| must stay below sqrt(X)");
  if (r < 1 || gcd64(std::abs(v), r) != 1)
    throw std::invalid_argument("need (v, r) = 1, r >= 1");
  // W peaks at u0 = (k - 1/2) / (4 pi); truncate where W is negligible
  double u0 = (k - 0.5) / (4 * M_PI);
  double peak = weight_W(u0, k);
  std::complex<double> sum = 0;
  for (int64_t n = 1; n <= s.max_index() - std::max<int64_t>(h, 0); ++n) {
    if (n + h < 1) continue;
    double w1 = weight_W(n / X, k);
    double w2 = weight_W((n + h) / X, k);
    if (n / X > u0 && w1 < 1e-16 * peak) break;
    double cc = s.c[static_cast<size_t>(n)] * s.c[static_cast<size_t>(n + h)];
    if (cc == 0) continue;
    double phase = 2 * M_PI * static_cast<double>(v) * n / r;
    sum += cc * w1 * w2 * std::complex<double>(std::cos(phase),
                                               std::sin(phase));
  }
  return sum;
}

SquareDivisorTail square_divisor_tail(const CoeffSeries& s, int64_t X,
                                      int64_t Y) {
  if (Y < 1) throw std::invalid_argument("Y must be at least 1");
  if (X > s.max_index()) throw std::out_of_range("X exceeds the stored range");
  SquareDivisorTail out;
  for (int64_t d = Y + 1; d * d <= X; ++d) {
    double sum = 0;
    for (int64_t n = d * d; n <= X; n += d * d) {
      if (s.mask_odd && n % 2 == 0) continue;
      if (s.mask_coprime && gcd64(n, s.N) != 1) continue;
      sum += std::abs(s.c[static_cast<size_t>(n)]);
    }
    out.per_d[d] = sum;
    out.total += sum;
  }
  return out;
}

}  // namespace fc
