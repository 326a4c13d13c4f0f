#ifndef FC_COHEN_HPP
#define FC_COHEN_HPP

// Hurwitz class numbers and the generalized (Cohen) class numbers
// H(l, N), computed exactly via generalized Bernoulli numbers. A batch
// path produces the full H(3, .) and H(5, .) tables needed to build
// the Eisenstein-Jacobi series to large index.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fc {

// Bernoulli number B_n (B_1 = -1/2 convention).
mpq_class bernoulli_number(int n);

// Coefficients of the Bernoulli polynomial B_n(x), ascending in x.
std::vector<mpq_class> bernoulli_poly(int n);

// L(1-l, chi_{D0}) for a fundamental discriminant D0 (or D0 = 1, which
// gives zeta(1-l)), exact.
mpq_class dirichlet_L_neg(int l, int64_t D0);

// Hurwitz class number H(N) by direct weighted enumeration of reduced
// (not necessarily primitive) forms of discriminant -N. H(0) = -1/12.
mpq_class hurwitz_class_number(int64_t N);

// Cohen class number H(l, N), l >= 1, N >= 0. Vanishes unless
// (-1)^l N ≡ 0, 1 (mod 4); H(l, 0) = zeta(1 - 2l). H(1, N) = H(N).
mpq_class cohen_number(int l, int64_t N);

// H(3, N) and H(5, N) for all 0 <= N <= X in a single pass over the
// fundamental discriminants. Exact; parallelized over discriminants
// with a thread-count-independent result.
struct CohenTables {
  std::vector<mpq_class> h3, h5;
};
CohenTables cohen_tables_35(int64_t X, int threads = 1);

}  // namespace fc

#endif
