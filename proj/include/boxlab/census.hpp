#pragma once

// Normal-subgroup census machinery: HNF sublattices of Z^2, the Z^2 x| D4
// count (closed form plus a normal-closure brute-force oracle), the Z x Z/2
// census with its K_n table, cycle-retraction quasi-isometry constants over
// the full box of Z x Z/2, and the subgroup-growth inequality checker.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxlab/arith.hpp"
#include "boxlab/group.hpp"

namespace boxlab {

// Sublattice of Z^2 in Hermite normal form: rows (a, b), (0, d) with
// a, d >= 1 and 0 <= b < d. Index = a * d.
struct Sublattice {
  std::int64_t a = 1, b = 0, d = 1;
  std::int64_t index() const { return a * d; }
  bool contains(std::int64_t x, std::int64_t y) const;
  bool operator==(const Sublattice&) const = default;
};

// All HNF sublattices of index <= maxIndex, each exactly once.
std::vector<Sublattice> enumerate_sublattices(std::int64_t maxIndex);

using Mat2 = std::array<std::int64_t, 4>;  // row-major [[m0, m1], [m2, m3]]

// g L <= L for every generator, checked on the two basis vectors.
bool is_invariant(const Sublattice& L, const std::vector<Mat2>& gens);

// The two reflections (x,y) -> (y,x) and (x,y) -> (x,-y) generating D4.
std::vector<Mat2> d4_reflections();

struct SubgroupCensus {
  std::vector<std::uint64_t> a;  // a[n], 1-based; a[0] unused
  std::vector<std::uint64_t> s;  // s[n] = sum of a[1..n]
  std::string provenance;

  std::uint64_t max_n() const { return a.size() - 1; }
  // CSV rows "n, a_n, s_n, provenance".
  std::string to_csv() const;
};

// One normal subgroup per k at each index k^2, 2k^2, 4k^2, 8k^2 (type A) and
// 2k^2, 4k^2, 8k^2, 16k^2 (type B), accumulated up to maxN.
SubgroupCensus census_z2d4_closedform(std::int64_t maxN);

// Independent brute force over D4-invariant sublattices L: enumerate the
// normal subgroups of (Z^2/L) x| D4 meeting the base trivially and pull back
// their indices. Requires maxN <= 100.
SubgroupCensus census_z2d4_oracle(std::int64_t maxN);

struct ZxZ2Census {
  SubgroupCensus census;
  std::vector<std::uint64_t> K;  // K[n]: subgroups projecting onto nZ
};

// All finite-index subgroups of Z x Z/2: nZ x Z/2 (index n) and <(n,eps)>
// for eps in {0,1} (index 2n).
ZxZ2Census census_z_cross_z2(std::int64_t maxN);

struct RetractionRow {
  GroupSpec spec;
  std::uint64_t order = 0;
  int cycle_length = 0;
  double A = 1.0;  // best constant with (1/A)d - A <= d(f(x),f(y)) <= A d + A
};

struct RetractionReport {
  std::vector<RetractionRow> rows;
  double max_A = 1.0;
  std::uint64_t argmax_order = 0;
  std::string to_json() const;
};

// For every finite-index subgroup M of Z x Z/2 with |G/M| <= maxIndex, build
// the quotient Cayley graph on {(+-1,0), (0,1)}, retract onto the cycle C_n
// given by the order-n element (n from p(M) = nZ), and measure the best
// quasi-isometry constant by exhaustive pair comparison. maxIndex <= 200.
RetractionReport fullbox_cycle_retraction(std::int64_t maxIndex);

struct GrowthCheckReport {
  std::vector<bool> per_n;  // 1-based; per_n[0] unused
  std::optional<std::int64_t> first_violation;
  bool holds = false;
};

// Checks a_n(G) <= s_floor(Bn)(H) - s_ceil(An)(H) for n in [1, horizon].
// aG must cover [1, horizon] and sH must cover [1, floor(B * horizon)].
GrowthCheckReport growth_inequality_check(const std::vector<std::uint64_t>& aG,
                                          const std::vector<std::uint64_t>& sH,
                                          const arith::Rat& A,
                                          const arith::Rat& B,
                                          std::int64_t horizon);

}  // namespace boxlab
