#include "boxlab/arith.hpp"

#include <utility>

#include "boxlab/errors.hpp"

namespace boxlab::arith {

namespace {

// Returns (F_n, F_{n+1}) by fast doubling.
std::pair<Int, Int> fib_pair(std::uint64_t n) {
  if (n == 0) return {0, 1};
  auto [a, b] = fib_pair(n >> 1);  // a = F_k, b = F_{k+1}
  Int c = a * (2 * b - a);         // F_{2k}
  Int d = a * a + b * b;           // F_{2k+1}
  if (n & 1) return {d, c + d};
  return {c, d};
}

}  // namespace

Int fib(std::uint64_t n) { return fib_pair(n).first; }

Int lucas(std::uint64_t n) {
  // L_n = F_{n-1} + F_{n+1}; handle n = 0 directly.
  if (n == 0) return 2;
  auto [fn_1, fn] = fib_pair(n - 1);
  // fn_1 = F_{n-1}, fn = F_n; L_n = 2*F_{n-1} + F_n.
  return 2 * fn_1 + fn;
}

std::uint64_t pisano(const Int& N) {
  if (N < 2) throw InvalidInputError("pisano: N must be >= 2");
  Int a = 0, b = 1;  // (F_j, F_{j+1}) mod N
  std::uint64_t e = 0;
  // delta(N) <= 6N, so this terminates quickly at desk scale.
  do {
    Int t = (a + b) % N;
    a = b;
    b = t;
    ++e;
  } while (!(a == 0 && b == 1));
  return e;
}

std::uint64_t rank_of_apparition(const Int& N) {
  if (N < 2) throw InvalidInputError("rank_of_apparition: N must be >= 2");
  Int a = 0, b = 1;
  std::uint64_t e = 0;
  do {
    Int t = (a + b) % N;
    a = b;
    b = t;
    ++e;
  } while (a != 0);
  return e;
}

Int sl_order_prime_power(int m, std::uint64_t p, std::uint64_t k) {
  if (m < 2) throw InvalidInputError("sl_order: m must be >= 2");
  if (p < 2 || k < 1) throw InvalidInputError("sl_order: bad prime power");
  Int P(static_cast<unsigned long>(p));
  Int result;
  mpz_pow_ui(result.get_mpz_t(), P.get_mpz_t(),
             static_cast<unsigned long>(k * (m * m - 1)));
  // Multiply by prod_{i=2..m} (1 - p^{-i}) = prod (p^i - 1) / p^{2+...+m}.
  for (int i = 2; i <= m; ++i) {
    Int pi;
    mpz_pow_ui(pi.get_mpz_t(), P.get_mpz_t(), i);
    result *= pi - 1;
    result /= pi;  // exact: k(m^2-1) >= 2+...+m
  }
  return result;
}

Int sl_order(int m, std::uint64_t N) {
  if (N < 2) throw InvalidInputError("sl_order: N must be >= 2");
  Int result = 1;
  std::uint64_t n = N;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    result *= sl_order_prime_power(m, p, k);
  }
  if (n > 1) result *= sl_order_prime_power(m, n, 1);
  return result;
}

Int sigma_divisors(std::uint64_t n) {
  if (n < 1) throw InvalidInputError("sigma_divisors: n must be >= 1");
  Int s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

std::uint64_t nth_prime(int i) {
  if (i < 1) throw InvalidInputError("nth_prime: index must be >= 1");
  std::uint64_t count = 0, p = 1;
  while (count < static_cast<std::uint64_t>(i)) {
    ++p;
    bool prime = p >= 2;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) ++count;
  }
  return p;
}

Int ell(int k) {
  if (k < 1) throw InvalidInputError("ell: k must be >= 1");
  Int prod = 1;
  for (int i = 1; i <= k; ++i) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(nth_prime(i)));
    prod *= t - 1;
  }
  return prod;
}

Int nks(const Rat& s, std::uint64_t k) {
  if (s < 1) throw InvalidInputError("nks: s must be >= 1");
  Rat ks = s * static_cast<unsigned long>(k);
  Int floor_ks;
  mpz_fdiv_q(floor_ks.get_mpz_t(), ks.get_num().get_mpz_t(),
             ks.get_den().get_mpz_t());
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, floor_ks.get_ui());
  return r;
}

Rat parse_rational(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InvalidInputError("parse_rational: cannot parse '" + s + "'");
  }
}

}  // namespace boxlab::arith
