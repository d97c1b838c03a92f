#pragma once

// Coarse invariants: almost permutations with displacement analysis, the
// order-preservation hypothesis implying bounded displacement, and exact
// ratio-bounded matchings between growth sequences (used to tell box spaces
// apart by their component volumes).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/arith.hpp"

namespace boxlab {

// Partial injective self-map of {1..H}; image[k] == nullopt marks an index
// outside the domain. Injectivity is enforced by validate().
struct AlmostPermutation {
  int horizon = 0;
  std::vector<std::optional<int>> image;  // 1-based, size horizon + 1

  std::optional<int> at(int k) const { return image[k]; }
  bool total() const;
  void validate() const;  // throws InvalidInputError on non-injectivity

  static AlmostPermutation identity(int H);
  static AlmostPermutation shift(int H);  // k -> k+1 on {1..H-1}
  // Blocks {1}, {2,3}, {4,5,6}, ... each cyclically shifted by one.
  static AlmostPermutation block_cyclic(int H);
  // Shuffle each window [1..N], [N+1..2N], ... independently.
  static AlmostPermutation window_shuffled(int H, int N, std::uint64_t seed);
};

struct DisplacementReport {
  int max_disp = 0;
  int argmax = 0;  // least index attaining max_disp
  // True when the running max still increases within the top decile of the
  // horizon: no bound <= max_disp is certified beyond it.
  bool growing_at_horizon = false;
};

DisplacementReport displacement(const AlmostPermutation& ap);

struct PermutHypothesisReport {
  bool holds = false;
  std::optional<std::pair<int, int>> violating_pair;  // (k, l) with l >= k+N
  // When the hypothesis holds: k-N <= a(k) <= k+N verified on [N, H-N].
  bool bounds_hold = false;
};

// Checks "l >= k+N implies a(l) > a(k)" for all pairs; requires a total map.
PermutHypothesisReport permut_hypothesis(const AlmostPermutation& ap, int N);

struct MatchingVerdict {
  bool matched = false;
  int D = 0;
  arith::Rat R;
  int H = 0;
  // matched: total assignment k -> j on the window [D+1, H-D].
  std::vector<std::pair<int, int>> assignment;
  // distinguished: Hall violator, |rows| > |neighborhood(rows)|.
  std::vector<int> obstruction_rows;
  std::vector<int> obstruction_cols;

  std::string status() const;  // "matched" or "distinguished-at(D,R,H)"
};

// Injective assignment k -> j with |j - k| <= D and
// max(a_k/b_j, b_j/a_k) <= R, total on [D+1, H-D]. Exact augmenting-path
// matching; cross-multiplied comparisons only.
MatchingVerdict ratio_bounded_matching(const std::vector<arith::Int>& seqA,
                                       const std::vector<arith::Int>& seqB,
                                       int D, const arith::Rat& R, int H);

// Independent re-check of a `matched` witness against the raw constraints.
bool verify_matching(const MatchingVerdict& v,
                     const std::vector<arith::Int>& seqA,
                     const std::vector<arith::Int>& seqB);

// Matching on the 2^floor(ks) growth sequences; matched iff s = t at desk
// scale (budget echoed in the verdict).
MatchingVerdict distinguish_nks(const arith::Rat& s, const arith::Rat& t,
                                int D, const arith::Rat& R, int H);

// Matching on |SL_m(Z/p^k)| vs |SL_n(Z/q^k)| volume sequences.
MatchingVerdict distinguish_sl_volumes(int m, std::uint64_t p, int n,
                                       std::uint64_t q, int D,
                                       const arith::Rat& R, int H);

}  // namespace boxlab
