#ifndef FC_STATS_HPP
#define FC_STATS_HPP

// Measurement harness over coefficient sequences: sign changes over
// masked indices, short interval sums with sign change certification,
// second and fourth moments, large value counting against the
// explicit threshold, shifted convolution sums, and square divisor
// tails.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fc/halfint.hpp"

namespace fc {

struct CoeffSeries {
  std::vector<double> c;  // c[n] for n >= 0; c[0] unused
  int64_t N = 1;          // level used by the coprimality mask
  bool mask_odd = true;
  bool mask_squarefree = true;
  bool mask_coprime = true;

  int64_t max_index() const { return static_cast<int64_t>(c.size()) - 1; }
  bool masked(int64_t n) const;  // true when n passes every enabled mask
};

// Normalized coefficients c(n) of a half-integral weight form.
CoeffSeries series_from_halfint(const HalfIntForm& f);
// Lines "n,c"; missing n are zero. Throws on malformed input.
CoeffSeries series_from_csv(const std::string& path);

// W(u) = u^{(k - 1/2)/2} e^{-2 pi u}.
double weight_W(double u, double k);

struct SignChangeResult {
  int64_t count = 0;
  std::vector<std::pair<int64_t, int64_t>> pairs;  // consecutive flip pairs
};

// Strict sign changes c(n_i) c(n_{i+1}) < 0 over consecutive nonzero
// masked entries in [X, MX]; zeros are skipped, never counted.
SignChangeResult sign_changes(const CoeffSeries& s, int64_t X, int64_t MX);

struct IntervalSums {
  double abs_of_sum = 0;  // |sum of masked c(n)|
  double sum_of_abs = 0;  // sum of masked |c(n)|
  bool certifies_flip = false;  // abs_of_sum strictly below sum_of_abs
};

IntervalSums short_interval_sums(const CoeffSeries& s, int64_t x, int64_t y);

// Masked sum of |c(n)|^power over [X, MX]; power 2 or 4.
double moment_sums(const CoeffSeries& s, int64_t X, int64_t MX, int power);

double large_value_threshold(int64_t n);
// Masked n in [X, X2] with |c(n)| at or above the threshold.
std::vector<int64_t> large_values(const CoeffSeries& s, int64_t X, int64_t X2);

// sum over n of c(n) c(n+h) e(nv/r) W(n/X) W((n+h)/X), truncated when
// the weights fall below 1e-16 of their peak. h = 0 is rejected.
std::complex<double> shifted_convolution(const CoeffSeries& s, int64_t h,
                                         int64_t v, int64_t r, double X,
                                         double k);

struct SquareDivisorTail {
  double total = 0;
  std::map<int64_t, double> per_d;  // d -> sum over n <= X with d^2 | n
};

// Tail over d > Y of the square divisor sums of |c(n)|.
SquareDivisorTail square_divisor_tail(const CoeffSeries& s, int64_t X,
                                      int64_t Y);

}  // namespace fc

#endif
