#pragma once

// Exact arithmetic in F_2[X] and its quotient rings.
//
// Polynomials are stored as coefficient bitmasks: bit i is the coefficient
// of X^i. All supported degrees fit in 64 bits (products of the moduli used
// here stay below degree 40).

#include <cstdint>
#include <string>
#include <vector>

#include "boxlab/errors.hpp"

namespace boxlab::f2 {

using Poly = std::uint64_t;

constexpr Poly kZero = 0;
constexpr Poly kOne = 1;

// Degree of a nonzero polynomial; -1 for the zero polynomial.
int degree(Poly p);

inline Poly add(Poly a, Poly b) { return a ^ b; }

// Carry-less product (no reduction).
Poly mul(Poly a, Poly b);

// Remainder of a after division by m. m must have degree >= 1.
Poly mod(Poly a, Poly m);

// a*b mod m. Throws InvalidInputError if m is zero or constant.
Poly mul_mod(Poly a, Poly b, Poly m);

// a^e mod m.
Poly pow_mod(Poly a, std::uint64_t e, Poly m);

Poly gcd(Poly a, Poly b);

// True iff p has no factorization into lower-degree polynomials.
// Exhaustive trial division; requires deg(p) >= 1.
bool is_irreducible(Poly p);

// Least e >= 1 with a^e = 1 mod m. Throws if gcd(a, m) != 1.
std::uint64_t multiplicative_order(Poly a, Poly m);

// The numerically least irreducible polynomial of degree d whose root
// generates the multiplicative group of F_{2^d} (i.e. ord(X) = 2^d - 1).
// Deterministic; 1 <= d <= 20.
Poly find_primitive_poly(int d);

// Product P_1 * ... * P_k of the primitive polynomials of the first k
// prime degrees (2, 3, 5, ...).
Poly primitive_product(int k);

// Hex string of the little-endian coefficient bytes, e.g. X^2+X+1 -> "07".
std::string to_hex(Poly p);
Poly from_hex(const std::string& s);

// Human-readable form like "X^3+X+1".
std::string to_string(Poly p);

}  // namespace boxlab::f2
