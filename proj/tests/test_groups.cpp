#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <random>
#include <unordered_set>

#include "boxlab/arith.hpp"
#include "boxlab/group.hpp"
#include "boxlab/poly_f2.hpp"

using namespace boxlab;

namespace {

// BFS closure of the generating set (generation certificate oracle).
std::size_t bfs_closure_size(const Group& g, std::size_t cap) {
  std::unordered_set<Elt, EltHash> seen{g.identity()};
  std::deque<Elt> queue{g.identity()};
  auto gens = g.generators();
  while (!queue.empty()) {
    Elt v = queue.front();
    queue.pop_front();
    for (const Elt& s : gens) {
      Elt w = g.multiply(v, s);
      if (seen.insert(w).second) {
        queue.push_back(w);
        REQUIRE(seen.size() <= cap);
      }
    }
  }
  return seen.size();
}

Elt random_element(const Group& g, std::mt19937_64& rng, int words = 12) {
  Elt e = g.identity();
  auto gens = g.generators();
  for (int i = 0; i < words; ++i)
    e = g.multiply(e, gens[rng() % gens.size()]);
  return e;
}

void check_group_laws(const Group& g, std::mt19937_64& rng, int trials) {
  Elt id = g.identity();
  for (int t = 0; t < trials; ++t) {
    Elt a = random_element(g, rng), b = random_element(g, rng),
        c = random_element(g, rng);
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    CHECK(g.multiply(a, id) == a);
    CHECK(g.multiply(id, a) == a);
    CHECK(g.multiply(a, g.inverse(a)) == id);
    CHECK(g.multiply(g.inverse(a), a) == id);
  }
}

}  // namespace

TEST_CASE("identity elements") {
  CHECK(make_group(GroupSpec::cyclic(7))->identity() == Elt{0});
  CHECK(make_group(GroupSpec::sol_quotient(5))->identity() == Elt{0, 0, 0});
  CHECK(make_group(GroupSpec::sl(2, 3))->identity() == Elt{1, 0, 0, 1});
}

TEST_CASE("spec multiplication examples") {
  auto sol = make_group(GroupSpec::sol_quotient(5));
  CHECK(sol->multiply({1, 0, 1}, {1, 0, 0}) == Elt{2, 1, 1});

  auto lamp = make_group(GroupSpec::lamplighter_congruence(1));
  CHECK(lamp->multiply({1, 0}, {1, 0}) == Elt{0, 0});

  auto sl = make_group(GroupSpec::sl(2, 3));
  CHECK(sl->multiply({1, 1, 0, 1}, {1, 1, 0, 1}) == Elt{1, 2, 0, 1});
}

TEST_CASE("spec inverse examples") {
  CHECK(make_group(GroupSpec::cyclic(7))->inverse({3}) == Elt{4});
  CHECK(make_group(GroupSpec::sol_quotient(5))->inverse({1, 0, 0}) ==
        Elt{4, 0, 0});
  CHECK(make_group(GroupSpec::heisenberg(4))->inverse({1, 0, 0}) ==
        Elt{3, 0, 0});
}

TEST_CASE("generating sets") {
  auto cyc = make_group(GroupSpec::cyclic(5));
  CHECK(cyc->generators() == std::vector<Elt>{{1}, {4}});

  auto wr = make_group(GroupSpec::wreath(LampType::Z4, 2));
  CHECK(wr->generators().size() == 5);

  auto lamp = make_group(GroupSpec::lamplighter_congruence(1));
  CHECK(lamp->generators() == std::vector<Elt>{{0, 1}, {0, 2}, {1, 0}});
}

TEST_CASE("closed-form orders") {
  CHECK(make_group(GroupSpec::sol_quotient(5))->order() == 500);
  CHECK(make_group(GroupSpec::lamplighter_congruence(2))->order() == 672);
  CHECK(make_group(GroupSpec::sl(2, 2))->order() == 6);
  CHECK(make_group(GroupSpec::wreath(LampType::Z2xZ2, 3))->order() == 192);
  CHECK(make_group(GroupSpec::heisenberg(4))->order() == 64);
  CHECK(make_group(GroupSpec::zxz2_quotient(6, 2))->order() == 6);
  CHECK(make_group(GroupSpec::zxz2_quotient(6, 1))->order() == 12);
}

TEST_CASE("group laws on random triples, all families") {
  std::mt19937_64 rng(2024);
  std::vector<GroupSpec> specs = {
      GroupSpec::cyclic(12),
      GroupSpec::sol_quotient(5),
      GroupSpec::sol_quotient(8),
      GroupSpec::sl(2, 5),
      GroupSpec::sl(3, 2),
      GroupSpec::wreath(LampType::Z2, 5),
      GroupSpec::wreath(LampType::Z4, 3),
      GroupSpec::wreath(LampType::Z2xZ2, 3),
      GroupSpec::lamplighter_congruence(1),
      GroupSpec::lamplighter_congruence(2),
      GroupSpec::heisenberg(6),
      GroupSpec::zxz2_quotient(5, 0),
      GroupSpec::zxz2_quotient(5, 1),
      GroupSpec::zxz2_quotient(5, 2),
  };
  for (const auto& spec : specs) {
    CAPTURE(spec.to_string());
    auto g = make_group(spec);
    check_group_laws(*g, rng, 1000 / specs.size() + 10);
  }
}

TEST_CASE("BFS closure reaches exactly the closed-form order") {
  std::vector<GroupSpec> specs = {
      GroupSpec::cyclic(30),
      GroupSpec::sol_quotient(5),
      GroupSpec::sl(2, 4),
      GroupSpec::sl(3, 2),
      GroupSpec::wreath(LampType::Z4, 3),
      GroupSpec::lamplighter_congruence(2),
      GroupSpec::heisenberg(8),
      GroupSpec::zxz2_quotient(9, 1),
  };
  for (const auto& spec : specs) {
    CAPTURE(spec.to_string());
    auto g = make_group(spec);
    CHECK(bfs_closure_size(*g, g->order()) == g->order());
  }
}

TEST_CASE("sol: power map j -> A^j has period exactly delta(N)") {
  for (std::int64_t N : {2, 3, 5, 10}) {
    auto g = make_group(GroupSpec::sol_quotient(N));
    auto delta = arith::pisano(arith::Int(static_cast<long>(N)));
    // The generator (0,0,1) must have order delta(N).
    Elt a = {0, 0, 1 % static_cast<std::int64_t>(delta)};
    Elt x = a;
    std::uint64_t e = 1;
    while (x != g->identity()) {
      x = g->multiply(x, a);
      ++e;
      REQUIRE(e <= delta);
    }
    CHECK(e == delta);
  }
}

TEST_CASE("lamplighter: shift generator has order exactly ell_k") {
  for (int k = 1; k <= 3; ++k) {
    auto g = make_group(GroupSpec::lamplighter_congruence(k));
    Elt shift = {0, 1};
    Elt x = shift;
    std::uint64_t e = 1;
    std::uint64_t ellk = arith::ell(k).get_ui();
    while (x != g->identity()) {
      x = g->multiply(x, shift);
      ++e;
      REQUIRE(e <= ellk);
    }
    CHECK(e == ellk);
  }
}

TEST_CASE("quotient projections are generator-respecting homomorphisms") {
  // SolQuotient(25) -> SolQuotient(5): reduce coordinates, reduce shift.
  auto big = make_group(GroupSpec::sol_quotient(25));
  auto small = make_group(GroupSpec::sol_quotient(5));
  auto delta5 = static_cast<std::int64_t>(arith::pisano(5));
  auto proj = [&](const Elt& e) -> Elt {
    return {e[0] % 5, e[1] % 5, e[2] % delta5};
  };
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Elt a = random_element(*big, rng), b = random_element(*big, rng);
    CHECK(proj(big->multiply(a, b)) == small->multiply(proj(a), proj(b)));
  }
  auto gens_big = big->generators();
  auto gens_small = small->generators();
  for (std::size_t i = 0; i < gens_big.size(); ++i)
    CHECK(proj(gens_big[i]) == gens_small[i]);

  // LamplighterCongruence(3) -> LamplighterCongruence(2).
  auto lbig = make_group(GroupSpec::lamplighter_congruence(3));
  auto lsmall = make_group(GroupSpec::lamplighter_congruence(2));
  auto m2 = f2::primitive_product(2);
  std::int64_t ell2 = arith::ell(2).get_si();
  auto lproj = [&](const Elt& e) -> Elt {
    return {static_cast<std::int64_t>(f2::mod(static_cast<f2::Poly>(e[0]), m2)),
            e[1] % ell2};
  };
  for (int t = 0; t < 200; ++t) {
    Elt a = random_element(*lbig, rng), b = random_element(*lbig, rng);
    CHECK(lproj(lbig->multiply(a, b)) == lsmall->multiply(lproj(a), lproj(b)));
  }
}

TEST_CASE("parent membership") {
  SolParent sol(5);
  CHECK(sol.in_filtration_subgroup({5, 0, 0}, 1));
  CHECK_FALSE(sol.in_filtration_subgroup({1, 0, 0}, 1));
  CHECK_FALSE(sol.in_filtration_subgroup({0, 0, 1}, 1));
  CHECK(sol.in_filtration_subgroup({0, 0, 20}, 1));  // delta(5) = 20

  LamplighterParent lamp;
  // P_1 * X: support bits 111 at offset 1 (P_1 = X^2+X+1).
  CHECK(lamp.in_filtration_subgroup({1, 0b111, 0}, 1));
  CHECK_FALSE(lamp.in_filtration_subgroup({0, 1, 0}, 1));
  CHECK_FALSE(lamp.in_filtration_subgroup({0, 0, 1}, 1));
  CHECK(lamp.in_filtration_subgroup({0, 0, 3}, 1));  // ell_1 = 3

  ZParent z({2, 4, 8});
  CHECK(z.in_filtration_subgroup({4}, 2));
  CHECK_FALSE(z.in_filtration_subgroup({4}, 3));
}

TEST_CASE("parent group laws") {
  std::mt19937_64 rng(11);
  SolParent sol(5);
  check_group_laws(sol, rng, 100);
  LamplighterParent lamp;
  check_group_laws(lamp, rng, 100);
}
