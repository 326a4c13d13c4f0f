#ifndef FC_ARITH_HPP
#define FC_ARITH_HPP

// Elementary number theory helpers: sieves, factorization of 64-bit
// integers, multiplicative functions, Kronecker symbols, fundamental
// discriminant tests, and enumeration of primes represented by a
// positive definite binary quadratic form.

#include <cstdint>
#include <utility>
#include <vector>

namespace fc {

// Primes up to and including n, by Eratosthenes.
std::vector<int64_t> primes_up_to(int64_t n);

// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0).
std::vector<int32_t> spf_table(int32_t n);

// Prime factorization of n >= 1 as (prime, exponent) pairs in
// increasing prime order. Trial division; fine for the sizes we use.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// Moebius function; 0 if n is not squarefree.
int moebius(int64_t n);

// Number of distinct prime factors.
int omega(int64_t n);

// Number of prime factors counted with multiplicity.
int big_omega(int64_t n);

bool is_squarefree(int64_t n);

// Kronecker symbol (a|n), defined for all integers n (including
// n <= 0) with the usual 2-adic and sign conventions.
int kronecker(int64_t a, int64_t n);

// True if d is a fundamental discriminant: either d ≡ 1 (mod 4) and
// squarefree, or d = 4m with m ≡ 2,3 (mod 4) squarefree. d = 1 is the
// degenerate trivial discriminant; it is accepted only when allow_one
// is set.
bool is_fundamental(int64_t d, bool allow_one = false);

// All primes p <= X represented by the positive definite form
// a x^2 + b x y + c y^2 (a > 0, b^2 - 4ac < 0), sorted, deduplicated.
std::vector<int64_t> primes_by_form(int64_t a, int64_t b, int64_t c,
                                    int64_t X);

// gcd helper for possibly-negative 64-bit args.
int64_t gcd64(int64_t a, int64_t b);

// floor(sqrt(n)) for n >= 0, exact.
int64_t isqrt64(int64_t n);

// Deterministic Miller-Rabin for 64-bit n.
bool is_prime64(uint64_t n);

}  // namespace fc

#endif
