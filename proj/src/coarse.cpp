#include "boxlab/coarse.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "boxlab/errors.hpp"

namespace boxlab {

using arith::Int;
using arith::Rat;

bool AlmostPermutation::total() const {
  for (int k = 1; k <= horizon; ++k)
    if (!image[k]) return false;
  return true;
}

void AlmostPermutation::validate() const {
  if (horizon < 1 || image.size() != static_cast<std::size_t>(horizon) + 1)
    throw InvalidInputError("AlmostPermutation: malformed horizon");
  std::vector<int> seen;
  for (int k = 1; k <= horizon; ++k)
    if (image[k]) {
      if (*image[k] < 1)
        throw InvalidInputError("AlmostPermutation: image value < 1");
      seen.push_back(*image[k]);
    }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidInputError("AlmostPermutation: not injective");
}

AlmostPermutation AlmostPermutation::identity(int H) {
  AlmostPermutation ap{H, std::vector<std::optional<int>>(H + 1)};
  for (int k = 1; k <= H; ++k) ap.image[k] = k;
  return ap;
}

AlmostPermutation AlmostPermutation::shift(int H) {
  AlmostPermutation ap{H, std::vector<std::optional<int>>(H + 1)};
  for (int k = 1; k < H; ++k) ap.image[k] = k + 1;
  return ap;
}

AlmostPermutation AlmostPermutation::block_cyclic(int H) {
  AlmostPermutation ap{H, std::vector<std::optional<int>>(H + 1)};
  int start = 1;
  for (int b = 1; start + b - 1 <= H; start += b, ++b) {
    for (int i = 0; i < b - 1; ++i) ap.image[start + i] = start + i + 1;
    ap.image[start + b - 1] = start;
  }
  return ap;
}

AlmostPermutation AlmostPermutation::window_shuffled(int H, int N,
                                                     std::uint64_t seed) {
  if (N < 1) throw InvalidInputError("window_shuffled: N must be >= 1");
  AlmostPermutation ap{H, std::vector<std::optional<int>>(H + 1)};
  std::mt19937_64 rng(seed);
  for (int start = 1; start <= H; start += N) {
    int end = std::min(start + N - 1, H);
    std::vector<int> vals(end - start + 1);
    std::iota(vals.begin(), vals.end(), start);
    std::shuffle(vals.begin(), vals.end(), rng);
    for (int k = start; k <= end; ++k) ap.image[k] = vals[k - start];
  }
  return ap;
}

DisplacementReport displacement(const AlmostPermutation& ap) {
  ap.validate();
  DisplacementReport rep;
  rep.argmax = 0;
  int last_increase = 0;
  for (int k = 1; k <= ap.horizon; ++k) {
    if (!ap.image[k]) continue;
    int d = std::abs(*ap.image[k] - k);
    if (rep.argmax == 0 || d > rep.max_disp) {
      rep.max_disp = d;
      rep.argmax = k;
      last_increase = k;
    }
  }
  rep.growing_at_horizon = last_increase * 10 > ap.horizon * 9;
  return rep;
}

PermutHypothesisReport permut_hypothesis(const AlmostPermutation& ap, int N) {
  ap.validate();
  if (!ap.total())
    throw InvalidInputError("permut_hypothesis: map must be total on {1..H}");
  if (N < 1) throw InvalidInputError("permut_hypothesis: N must be >= 1");
  const int H = ap.horizon;

  PermutHypothesisReport rep;
  rep.holds = true;
  // l >= k+N implies a(l) > a(k)  <=>  a(l) > max_{k <= l-N} a(k).
  int prefix_max = 0, prefix_arg = 0;
  for (int l = 1; l <= H; ++l) {
    if (l - N >= 1) {
      int k = l - N;
      if (*ap.image[k] > prefix_max) {
        prefix_max = *ap.image[k];
        prefix_arg = k;
      }
      if (prefix_arg && *ap.image[l] <= prefix_max) {
        rep.holds = false;
        rep.violating_pair = {prefix_arg, l};
        return rep;
      }
    }
  }
  rep.bounds_hold = true;
  for (int k = 1; k <= H; ++k) {
    if (k >= N && *ap.image[k] < k - N) rep.bounds_hold = false;
    if (k <= H - N && *ap.image[k] > k + N) rep.bounds_hold = false;
  }
  return rep;
}

std::string MatchingVerdict::status() const {
  if (matched) return "matched";
  return "distinguished-at(" + std::to_string(D) + "," + R.get_str() + "," +
         std::to_string(H) + ")";
}

namespace {

bool ratio_ok(const Int& a, const Int& b, const Int& rp, const Int& rq) {
  return a * rq <= rp * b && b * rq <= rp * a;
}

struct Matcher {
  int H, D;
  const std::vector<std::vector<int>>& cand;  // per row, candidate columns
  std::vector<int> col_match;                 // column j -> row, 0 = free
  std::vector<char> col_seen;
  std::vector<int> touched_cols;

  bool augment(int row) {
    for (int j : cand[row]) {
      if (col_seen[j]) continue;
      col_seen[j] = 1;
      touched_cols.push_back(j);
      if (col_match[j] == 0 || augment(col_match[j])) {
        col_match[j] = row;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

MatchingVerdict ratio_bounded_matching(const std::vector<Int>& seqA,
                                       const std::vector<Int>& seqB, int D,
                                       const Rat& R, int H) {
  if (D < 0) throw InvalidInputError("ratio_bounded_matching: D must be >= 0");
  if (R < 1) throw InvalidInputError("ratio_bounded_matching: R must be >= 1");
  if (H <= 2 * D)
    throw InvalidInputError("ratio_bounded_matching: window empty (H <= 2D)");
  if (seqA.size() < static_cast<std::size_t>(H) ||
      seqB.size() < static_cast<std::size_t>(H))
    throw InvalidInputError("ratio_bounded_matching: sequences shorter than H");
  for (int i = 1; i < H; ++i)
    if (!(seqA[i - 1] < seqA[i]) || !(seqB[i - 1] < seqB[i]))
      throw InvalidInputError(
          "ratio_bounded_matching: sequences must be strictly increasing");

  MatchingVerdict v;
  v.D = D;
  v.R = R;
  v.H = H;

  Rat rc = R;
  rc.canonicalize();
  Int rp = rc.get_num(), rq = rc.get_den();

  const int lo = D + 1, hi = H - D;
  std::vector<std::vector<int>> cand(H + 1);
  for (int k = lo; k <= hi; ++k)
    for (int j = std::max(1, k - D); j <= std::min(H, k + D); ++j)
      if (ratio_ok(seqA[k - 1], seqB[j - 1], rp, rq)) cand[k].push_back(j);

  Matcher m{H, D, cand, std::vector<int>(H + 1, 0),
            std::vector<char>(H + 1, 0), {}};
  for (int k = lo; k <= hi; ++k) {
    m.touched_cols.clear();
    std::fill(m.col_seen.begin(), m.col_seen.end(), 0);
    if (!m.augment(k)) {
      // Hall violator: rows reachable by alternating paths from k, plus k,
      // against their joint neighborhood (the columns seen in the failed
      // search). One more row than columns.
      v.matched = false;
      std::vector<char> row_in(H + 1, 0);
      row_in[k] = 1;
      for (int j = 1; j <= H; ++j)
        if (m.col_seen[j]) {
          v.obstruction_cols.push_back(j);
          if (m.col_match[j]) row_in[m.col_match[j]] = 1;
        }
      for (int r = lo; r <= hi; ++r)
        if (row_in[r]) v.obstruction_rows.push_back(r);
      return v;
    }
  }
  v.matched = true;
  for (int j = 1; j <= H; ++j)
    if (m.col_match[j]) v.assignment.emplace_back(m.col_match[j], j);
  std::sort(v.assignment.begin(), v.assignment.end());
  return v;
}

bool verify_matching(const MatchingVerdict& v, const std::vector<Int>& seqA,
                     const std::vector<Int>& seqB) {
  if (!v.matched) return false;
  const int lo = v.D + 1, hi = v.H - v.D;
  if (v.assignment.size() != static_cast<std::size_t>(hi - lo + 1))
    return false;
  Rat rc = v.R;
  rc.canonicalize();
  Int rp = rc.get_num(), rq = rc.get_den();
  std::vector<char> col_used(v.H + 1, 0);
  int expect = lo;
  for (auto [k, j] : v.assignment) {
    if (k != expect++) return false;
    if (j < 1 || j > v.H || std::abs(j - k) > v.D) return false;
    if (col_used[j]) return false;
    col_used[j] = 1;
    if (!ratio_ok(seqA[k - 1], seqB[j - 1], rp, rq)) return false;
  }
  return true;
}

MatchingVerdict distinguish_nks(const Rat& s, const Rat& t, int D,
                                const Rat& R, int H) {
  if (s < 1 || t < 1)
    throw InvalidInputError("distinguish_nks: s, t must be >= 1");
  std::vector<Int> a, b;
  for (int k = 1; k <= H; ++k) {
    a.push_back(arith::nks(s, k));
    b.push_back(arith::nks(t, k));
  }
  return ratio_bounded_matching(a, b, D, R, H);
}

MatchingVerdict distinguish_sl_volumes(int m, std::uint64_t p, int n,
                                       std::uint64_t q, int D, const Rat& R,
                                       int H) {
  if (m < 2 || n < 2)
    throw InvalidInputError("distinguish_sl_volumes: m, n must be >= 2");
  std::vector<Int> a, b;
  for (int k = 1; k <= H; ++k) {
    a.push_back(arith::sl_order_prime_power(m, p, k));
    b.push_back(arith::sl_order_prime_power(n, q, k));
  }
  return ratio_bounded_matching(a, b, D, R, H);
}

}  // namespace boxlab
