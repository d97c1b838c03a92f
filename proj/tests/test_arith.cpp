#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "boxlab/arith.hpp"
#include "boxlab/errors.hpp"

using namespace boxlab;
using arith::Int;

namespace {

// Iterative recurrence oracle.
Int fib_iter(std::uint64_t n) {
  Int a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    Int t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// Least e with A^e = I mod N, by explicit 2x2 matrix powers.
std::uint64_t pisano_matrix_oracle(std::uint64_t N) {
  std::uint64_t m[4] = {1 % N, 1 % N, 1 % N, 0};
  std::uint64_t e = 1;
  while (!(m[0] == 1 % N && m[1] == 0 && m[2] == 0 && m[3] == 1 % N)) {
    std::uint64_t next[4] = {(m[0] + m[1]) % N, m[0], (m[2] + m[3]) % N, m[2]};
    std::copy(next, next + 4, m);
    ++e;
  }
  return e;
}

// Brute-force |SL_m(Z/N)| for m = 2, 3.
std::uint64_t sl_count_oracle(int m, std::uint64_t N) {
  std::uint64_t count = 0;
  std::uint64_t total = 1;
  for (int i = 0; i < m * m; ++i) total *= N;
  std::vector<std::uint64_t> a(m * m);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < m * m; ++i) {
      a[i] = c % N;
      c /= N;
    }
    std::uint64_t det;
    if (m == 2) {
      det = (a[0] * a[3] + N * N - a[1] * a[2] % (N * N)) % N;
    } else {
      std::int64_t d = static_cast<std::int64_t>(
          a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
          a[2] * (a[3] * a[7] - a[4] * a[6]));
      d %= static_cast<std::int64_t>(N);
      if (d < 0) d += N;
      det = d;
    }
    if (det == 1 % N) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("fibonacci and lucas") {
  CHECK(arith::fib(0) == 0);
  CHECK(arith::fib(1) == 1);
  CHECK(arith::fib(10) == 55);
  CHECK(arith::fib(19) == 4181);
  for (std::uint64_t n = 0; n <= 90; ++n) CHECK(arith::fib(n) == fib_iter(n));
  CHECK(arith::lucas(0) == 2);
  CHECK(arith::lucas(1) == 1);
  CHECK(arith::lucas(4) == 7);
  CHECK(arith::lucas(10) == 123);
  for (std::uint64_t n = 2; n <= 60; ++n)
    CHECK(arith::lucas(n) == arith::lucas(n - 1) + arith::lucas(n - 2));
}

TEST_CASE("pisano periods") {
  CHECK(arith::pisano(2) == 3);
  CHECK(arith::pisano(5) == 20);
  CHECK(arith::pisano(10) == 60);
  for (std::uint64_t N = 2; N <= 120; ++N)
    CHECK(arith::pisano(Int(static_cast<unsigned long>(N))) ==
          pisano_matrix_oracle(N));
}

TEST_CASE("pisano is lcm-multiplicative on coprime factors") {
  for (std::uint64_t m = 2; m <= 40; ++m)
    for (std::uint64_t n = m + 1; m * n <= 500; ++n) {
      if (std::gcd(m, n) != 1) continue;
      auto pm = arith::pisano(Int((unsigned long)m));
      auto pn = arith::pisano(Int((unsigned long)n));
      CHECK(arith::pisano(Int((unsigned long)(m * n))) == std::lcm(pm, pn));
    }
}

TEST_CASE("rank of apparition") {
  CHECK(arith::rank_of_apparition(2) == 3);
  CHECK(arith::rank_of_apparition(3) == 4);
  CHECK(arith::rank_of_apparition(4) == 6);
  CHECK(arith::rank_of_apparition(5) == 5);
  Int p5 = 5;
  for (int k = 1; k <= 6; ++k) {
    CHECK(arith::rank_of_apparition(p5) == std::uint64_t(mpz_get_ui(p5.get_mpz_t())));
    p5 *= 5;
  }
}

TEST_CASE("fibonacci gcd identity") {
  for (std::uint64_t m = 1; m <= 60; ++m)
    for (std::uint64_t n = m; n <= 60; ++n) {
      Int g;
      mpz_gcd(g.get_mpz_t(), arith::fib(m).get_mpz_t(),
              arith::fib(n).get_mpz_t());
      CHECK(g == arith::fib(std::gcd(m, n)));
    }
}

TEST_CASE("sl_order formula vs brute force") {
  CHECK(arith::sl_order(2, 2) == 6);
  CHECK(arith::sl_order(2, 6) == 144);
  CHECK(arith::sl_order(3, 2) == 168);
  for (std::uint64_t N = 2; N <= 9; ++N)
    CHECK(arith::sl_order(2, N) == sl_count_oracle(2, N));
  CHECK(arith::sl_order(3, 3) == sl_count_oracle(3, 3));
}

TEST_CASE("sigma of divisors") {
  CHECK(arith::sigma_divisors(1) == 1);
  CHECK(arith::sigma_divisors(6) == 12);
  CHECK(arith::sigma_divisors(12) == 28);
  for (std::uint64_t n = 1; n <= 100; ++n) {
    Int s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) s += d;
    CHECK(arith::sigma_divisors(n) == s);
  }
}

TEST_CASE("ell") {
  CHECK(arith::ell(1) == 3);
  CHECK(arith::ell(2) == 21);
  CHECK(arith::ell(3) == 651);
}

TEST_CASE("nks") {
  using arith::Rat;
  CHECK(arith::nks(Rat(1), 5) == 32);
  CHECK(arith::nks(Rat(3, 2), 3) == 16);
  CHECK(arith::nks(Rat(3, 2), 4) == 64);
  CHECK_THROWS_AS(arith::nks(Rat(1, 2), 3), InvalidInputError);
}

TEST_CASE("rational parsing") {
  CHECK(arith::parse_rational("3/2") == arith::Rat(3, 2));
  CHECK(arith::parse_rational("7") == 7);
  CHECK_THROWS_AS(arith::parse_rational("x"), InvalidInputError);
}
