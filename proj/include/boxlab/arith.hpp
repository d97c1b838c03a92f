#pragma once

// Number-theoretic kernel: Fibonacci/Lucas numbers, Pisano periods,
// rank of apparition, |SL_m(Z/N)|, divisor sums, the lamplighter cyclic
// orders ell_k, and the 2^[ks] schedules.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace boxlab::arith {

using Int = mpz_class;
using Rat = mpq_class;

// F_n with F_0 = 0, F_1 = 1 (fast doubling).
Int fib(std::uint64_t n);

// L_n with L_0 = 2, L_1 = 1.
Int lucas(std::uint64_t n);

// Least e >= 1 with A^e = I mod N for A = [[1,1],[1,0]], i.e. the period of
// the Fibonacci sequence mod N. Iterates the pair (F_j, F_{j+1}) mod N.
std::uint64_t pisano(const Int& N);

// Least e >= 1 with N | F_e.
std::uint64_t rank_of_apparition(const Int& N);

// |SL_m(Z/NZ)| via the multiplicative prime-power formula.
Int sl_order(int m, std::uint64_t N);

// |SL_m(Z/p^k Z)| = p^{k(m^2-1)} * prod_{i=2..m} (1 - p^{-i}).
Int sl_order_prime_power(int m, std::uint64_t p, std::uint64_t k);

// Sum of divisors of n.
Int sigma_divisors(std::uint64_t n);

// prod_{i=1..k} (2^{p_i} - 1), p_i the i-th prime.
Int ell(int k);

// 2^floor(k*s) for an exact rational s >= 1.
Int nks(const Rat& s, std::uint64_t k);

// i-th prime, 1-based (p_1 = 2).
std::uint64_t nth_prime(int i);

// Parse "a" or "a/b" into an exact rational (never via floating point).
Rat parse_rational(const std::string& s);

}  // namespace boxlab::arith
