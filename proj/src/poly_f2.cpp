#include "boxlab/poly_f2.hpp"

#include <array>
#include <bit>

namespace boxlab::f2 {

int degree(Poly p) {
  if (p == 0) return -1;
  return 63 - std::countl_zero(p);
}

Poly mul(Poly a, Poly b) {
  Poly r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

Poly mod(Poly a, Poly m) {
  int dm = degree(m);
  if (dm < 1) throw InvalidInputError("f2::mod: modulus must have degree >= 1");
  int da = degree(a);
  while (da >= dm) {
    a ^= m << (da - dm);
    da = degree(a);
  }
  return a;
}

Poly mul_mod(Poly a, Poly b, Poly m) {
  if (degree(m) < 1)
    throw InvalidInputError("f2::mul_mod: modulus must have degree >= 1");
  return mod(mul(mod(a, m), mod(b, m)), m);
}

Poly pow_mod(Poly a, std::uint64_t e, Poly m) {
  Poly r = mod(kOne, m);
  a = mod(a, m);
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b) {
  while (b) {
    Poly r = degree(b) == 0 ? kZero : mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

bool is_irreducible(Poly p) {
  int d = degree(p);
  if (d < 1) throw InvalidInputError("is_irreducible: constant polynomial");
  if (d == 1) return true;
  // Trial division by every polynomial of degree 1..d/2.
  for (int e = 1; 2 * e <= d; ++e) {
    for (Poly q = Poly{1} << e; q < (Poly{1} << (e + 1)); ++q) {
      if (mod(p, q) == 0) return false;
    }
  }
  return true;
}

std::uint64_t multiplicative_order(Poly a, Poly m) {
  a = mod(a, m);
  if (gcd(a, m) != kOne)
    throw InvalidInputError("multiplicative_order: element is not a unit");
  Poly one = mod(kOne, m);
  Poly x = a;
  std::uint64_t e = 1;
  std::uint64_t cap = Poly{1} << degree(m);  // group order bound
  while (x != one) {
    x = mul_mod(x, a, m);
    ++e;
    if (e > cap)
      throw VerificationError("multiplicative_order: exceeded group order bound");
  }
  return e;
}

Poly find_primitive_poly(int d) {
  if (d < 1 || d > 20)
    throw InvalidInputError("find_primitive_poly: degree out of range [1,20]");
  std::uint64_t group = (std::uint64_t{1} << d) - 1;
  for (Poly p = Poly{1} << d; p < (Poly{1} << (d + 1)); ++p) {
    if ((p & 1) == 0) continue;  // X | p
    if (!is_irreducible(p)) continue;
    if (multiplicative_order(Poly{2} /*X*/, p) == group) return p;
  }
  throw VerificationError("find_primitive_poly: no primitive polynomial found");
}

namespace {
constexpr std::array<int, 8> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};
}

Poly primitive_product(int k) {
  if (k < 1 || k > 5)
    throw InvalidInputError("primitive_product: k out of range [1,5]");
  Poly prod = kOne;
  for (int i = 0; i < k; ++i) prod = mul(prod, find_primitive_poly(kPrimes[i]));
  return prod;
}

std::string to_hex(Poly p) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  do {
    unsigned byte = p & 0xff;
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
    p >>= 8;
  } while (p);
  return out;
}

Poly from_hex(const std::string& s) {
  if (s.empty() || s.size() % 2 != 0)
    throw InvalidInputError("from_hex: need an even number of hex digits");
  Poly p = 0;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    auto nib = [&](char c) -> Poly {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw InvalidInputError("from_hex: bad hex digit");
    };
    Poly byte = (nib(s[i]) << 4) | nib(s[i + 1]);
    p |= byte << (4 * i);
  }
  return p;
}

std::string to_string(Poly p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (!((p >> i) & 1)) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "X";
    else
      out += "X^" + std::to_string(i);
  }
  return out;
}

}  // namespace boxlab::f2
