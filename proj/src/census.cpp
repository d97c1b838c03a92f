#include "boxlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "boxlab/cayley.hpp"

namespace boxlab {

using arith::Int;
using arith::Rat;

bool Sublattice::contains(std::int64_t x, std::int64_t y) const {
  // Basis rows (a, b) and (0, d).
  if (x % a != 0) return false;
  return (y - (x / a) * b) % d == 0;
}

std::vector<Sublattice> enumerate_sublattices(std::int64_t maxIndex) {
  if (maxIndex < 1)
    throw InvalidInputError("enumerate_sublattices: maxIndex >= 1");
  std::vector<Sublattice> out;
  for (std::int64_t a = 1; a <= maxIndex; ++a)
    for (std::int64_t d = 1; a * d <= maxIndex; ++d)
      for (std::int64_t b = 0; b < d; ++b) out.push_back({a, b, d});
  return out;
}

std::vector<Mat2> d4_reflections() {
  return {{1, 0, 0, -1}, {0, 1, 1, 0}};
}

bool is_invariant(const Sublattice& L, const std::vector<Mat2>& gens) {
  // Image of each basis vector must land back in L.
  for (const auto& g : gens) {
    std::int64_t rows[2][2] = {{L.a, L.b}, {0, L.d}};
    for (auto& row : rows) {
      std::int64_t x = g[0] * row[0] + g[1] * row[1];
      std::int64_t y = g[2] * row[0] + g[3] * row[1];
      if (!L.contains(x, y)) return false;
    }
  }
  return true;
}

std::string SubgroupCensus::to_csv() const {
  std::ostringstream os;
  os << "n,a_n,s_n,provenance\n";
  for (std::size_t n = 1; n < a.size(); ++n)
    os << n << "," << a[n] << "," << s[n] << "," << provenance << "\n";
  return os.str();
}

namespace {

void accumulate(SubgroupCensus& c) {
  c.s.assign(c.a.size(), 0);
  std::uint64_t run = 0;
  for (std::size_t n = 1; n < c.a.size(); ++n) {
    run += c.a[n];
    c.s[n] = run;
  }
}

}  // namespace

SubgroupCensus census_z2d4_closedform(std::int64_t maxN) {
  if (maxN < 1) throw InvalidInputError("census_z2d4_closedform: maxN >= 1");
  SubgroupCensus c;
  c.provenance = "closed-form";
  c.a.assign(maxN + 1, 0);
  for (std::int64_t k = 1; k * k <= maxN; ++k) {
    for (std::int64_t mult : {1, 2, 4, 8})  // type A: N meets the base in kZ^2
      if (mult * k * k <= maxN) ++c.a[mult * k * k];
    for (std::int64_t mult : {2, 4, 8, 16})  // type B: base part over 2kZ^2
      if (mult * k * k <= maxN) ++c.a[mult * k * k];
  }
  accumulate(c);
  return c;
}

namespace {

// Finite group (Z^2/L) x| D4 with full multiplication table, supporting the
// normal-subgroup enumeration of the census oracle.
struct SemidirectD4 {
  std::int64_t la, lb, ld;  // lattice HNF
  int nb = 0;               // |Z^2/L|
  int nr = 8;               // |D4|
  int M = 0;
  int r_id = 0;
  std::vector<Mat2> mats;
  std::vector<int> rmul;                          // nr * nr
  std::vector<std::pair<int, int>> reps;          // base index -> (x, y)
  std::vector<int> mult;                          // M * M
  std::vector<int> inv;

  explicit SemidirectD4(const Sublattice& L) : la(L.a), lb(L.b), ld(L.d) {
    nb = static_cast<int>(L.index());
    // Enumerate D4 as the closure of the two reflections.
    mats = {{1, 0, 0, 1}};
    auto refl = d4_reflections();
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < mats.size(); ++i)
        for (const auto& r : refl) {
          Mat2 p = mat_mul(mats[i], r);
          if (std::find(mats.begin(), mats.end(), p) == mats.end()) {
            mats.push_back(p);
            grew = true;
          }
        }
    }
    nr = static_cast<int>(mats.size());
    rmul.assign(nr * nr, 0);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nr; ++j) {
        Mat2 p = mat_mul(mats[i], mats[j]);
        rmul[i * nr + j] = static_cast<int>(
            std::find(mats.begin(), mats.end(), p) - mats.begin());
      }
    r_id = 0;

    reps.resize(nb);
    for (std::int64_t x = 0; x < la; ++x)
      for (std::int64_t y = 0; y < ld; ++y)
        reps[x * ld + y] = {static_cast<int>(x), static_cast<int>(y)};

    M = nr * nb;
    mult.assign(static_cast<std::size_t>(M) * M, 0);
    inv.assign(M, 0);
    for (int e = 0; e < M; ++e)
      for (int f = 0; f < M; ++f) mult[static_cast<std::size_t>(e) * M + f] = mul(e, f);
    for (int e = 0; e < M; ++e) {
      for (int f = 0; f < M; ++f)
        if (mul(e, f) == identity()) {
          inv[e] = f;
          break;
        }
    }
  }

  static Mat2 mat_mul(const Mat2& p, const Mat2& q) {
    return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
            p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
  }

  int canon(std::int64_t x, std::int64_t y) const {
    std::int64_t xm = ((x % la) + la) % la;
    std::int64_t k = (x - xm) / la;
    std::int64_t ym = (((y - k * lb) % ld) + ld) % ld;
    return static_cast<int>(xm * ld + ym);
  }

  int identity() const { return r_id * nb + canon(0, 0); }
  int base_of(int e) const { return e % nb; }
  int rot_of(int e) const { return e / nb; }
  bool in_base(int e) const { return rot_of(e) == r_id; }

  int mul(int e, int f) const {
    int r = rot_of(e), s = rot_of(f);
    auto [vx, vy] = reps[base_of(e)];
    auto [wx, wy] = reps[base_of(f)];
    const Mat2& R = mats[r];
    std::int64_t tx = vx + R[0] * wx + R[1] * wy;
    std::int64_t ty = vy + R[2] * wx + R[3] * wy;
    return rmul[r * nr + s] * nb + canon(tx, ty);
  }

  int tmul(int e, int f) const { return mult[static_cast<std::size_t>(e) * M + f]; }
};

// Subgroup generated by `gens`; empty result means it grew past `cap` or hit
// a nontrivial base element.
std::vector<int> closure_base_trivial(const SemidirectD4& q,
                                      const std::vector<int>& gens, int cap) {
  std::set<int> seen{q.identity()};
  std::vector<int> frontier{q.identity()};
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      int w = q.tmul(v, g);
      if (seen.insert(w).second) {
        if (w != q.identity() && q.in_base(w)) return {};
        if (static_cast<int>(seen.size()) > cap) return {};
        frontier.push_back(w);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_normal(const SemidirectD4& q, const std::vector<int>& sub) {
  std::set<int> s(sub.begin(), sub.end());
  for (int n : sub)
    for (int h = 0; h < q.M; ++h)
      if (!s.count(q.tmul(q.tmul(h, n), q.inv[h]))) return false;
  return true;
}

}  // namespace

SubgroupCensus census_z2d4_oracle(std::int64_t maxN) {
  if (maxN < 1) throw InvalidInputError("census_z2d4_oracle: maxN >= 1");
  if (maxN > 100)
    throw BudgetError("census_z2d4_oracle: maxN > 100 exceeds the budget");
  SubgroupCensus c;
  c.provenance = "normal-closure-oracle";
  c.a.assign(maxN + 1, 0);

  auto refl = d4_reflections();
  for (const auto& L : enumerate_sublattices(maxN)) {
    if (!is_invariant(L, refl)) continue;
    SemidirectD4 q(L);

    // A normal subgroup meeting the base trivially embeds into D4, so it has
    // order <= 8 and is generated by at most two elements whose cyclic
    // subgroups already avoid the base.
    std::vector<int> cands;
    for (int g = 0; g < q.M; ++g) {
      if (g == q.identity()) continue;
      if (!closure_base_trivial(q, {g}, 8).empty()) cands.push_back(g);
    }

    std::set<std::vector<int>> subgroups;
    subgroups.insert({q.identity()});
    for (std::size_t i = 0; i < cands.size(); ++i) {
      auto single = closure_base_trivial(q, {cands[i]}, 8);
      if (!single.empty()) subgroups.insert(single);
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        auto pair = closure_base_trivial(q, {cands[i], cands[j]}, 8);
        if (!pair.empty()) subgroups.insert(pair);
      }
    }

    for (const auto& sub : subgroups) {
      if (!is_normal(q, sub)) continue;
      std::int64_t index = q.M / static_cast<std::int64_t>(sub.size());
      if (index <= maxN) ++c.a[index];
    }
  }
  accumulate(c);
  return c;
}

ZxZ2Census census_z_cross_z2(std::int64_t maxN) {
  if (maxN < 1) throw InvalidInputError("census_z_cross_z2: maxN >= 1");
  ZxZ2Census out;
  out.census.provenance = "enumeration";
  out.census.a.assign(maxN + 1, 0);
  out.K.assign(maxN + 1, 0);
  for (std::int64_t n = 1; n <= maxN; ++n) {
    // Subgroups projecting onto nZ: nZ x Z/2 (index n) and <(n,eps)> for
    // eps in {0, 1} (index 2n). All distinct, all normal (abelian group).
    out.K[n] = 3;
    if (n <= maxN) ++out.census.a[n];
    if (2 * n <= maxN) out.census.a[2 * n] += 2;
  }
  accumulate(out.census);
  return out;
}

namespace {

std::vector<std::int32_t> bfs_from(const CayleyGraph& g, std::int32_t src) {
  std::vector<std::int32_t> dist(g.order(), -1);
  std::vector<std::int32_t> queue{src};
  dist[src] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::int32_t v = queue[h];
    for (std::uint32_t s = 0; s < g.degree; ++s) {
      std::int32_t w = g.neighbor(v, s);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::int64_t circ(std::int64_t k, std::int64_t n) {
  k = ((k % n) + n) % n;
  return std::min(k, n - k);
}

// Best single constant A with (1/A)d - A <= df <= A*d + A over all pairs.
double best_qi_constant(const std::vector<std::int64_t>& d,
                        const std::vector<std::int64_t>& df) {
  double A = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    A = std::max(A, double(df[i]) / double(d[i] + 1));
    // (1/A)d - A <= df  <=>  A^2 + A*df >= d.
    A = std::max(A, (-double(df[i]) +
                     std::sqrt(double(df[i]) * df[i] + 4.0 * double(d[i]))) /
                        2.0);
  }
  return A;
}

}  // namespace

RetractionReport fullbox_cycle_retraction(std::int64_t maxIndex) {
  if (maxIndex < 1)
    throw InvalidInputError("fullbox_cycle_retraction: maxIndex >= 1");
  if (maxIndex > 200)
    throw BudgetError("fullbox_cycle_retraction: maxIndex > 200");

  RetractionReport report;
  std::vector<GroupSpec> specs;
  for (std::int64_t n = 1; n <= maxIndex; ++n)
    specs.push_back(GroupSpec::zxz2_quotient(n, 2));
  for (std::int64_t n = 1; 2 * n <= maxIndex; ++n) {
    specs.push_back(GroupSpec::zxz2_quotient(n, 0));
    specs.push_back(GroupSpec::zxz2_quotient(n, 1));
  }

  for (const auto& spec : specs) {
    auto grp = make_group(spec);
    auto g = build_cayley(*grp, 2 * maxIndex);
    std::int64_t n = spec.params[0];

    // Image of each vertex on the cycle C_n carried by the order-n element:
    // drop the Z/2 coordinate (eps 0), reduce mod n (eps 1), identity (eps 2).
    std::vector<std::int64_t> cycle_pos(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
      cycle_pos[v] = g.vertices[v][0] % n;

    std::vector<std::int64_t> dists, fdists;
    for (std::size_t u = 0; u < g.order(); ++u) {
      auto du = bfs_from(g, static_cast<std::int32_t>(u));
      for (std::size_t v = u + 1; v < g.order(); ++v) {
        dists.push_back(du[v]);
        fdists.push_back(n == 1 ? 0 : circ(cycle_pos[u] - cycle_pos[v], n));
      }
    }
    RetractionRow row;
    row.spec = spec;
    row.order = g.order();
    row.cycle_length = static_cast<int>(n);
    row.A = dists.empty() ? 1.0 : best_qi_constant(dists, fdists);
    if (row.A > report.max_A || report.argmax_order == 0) {
      report.max_A = row.A;
      report.argmax_order = row.order;
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string RetractionReport::to_json() const {
  std::ostringstream os;
  os.precision(12);
  os << "{\"max_A\":" << max_A << ",\"argmax_order\":" << argmax_order
     << ",\"quotients\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << "{\"spec\":\"" << rows[i].spec.to_string()
       << "\",\"order\":" << rows[i].order
       << ",\"cycle\":" << rows[i].cycle_length << ",\"A\":" << rows[i].A
       << "}";
  }
  os << "]}";
  return os.str();
}

GrowthCheckReport growth_inequality_check(const std::vector<std::uint64_t>& aG,
                                          const std::vector<std::uint64_t>& sH,
                                          const Rat& A, const Rat& B,
                                          std::int64_t horizon) {
  if (horizon < 1)
    throw InvalidInputError("growth_inequality_check: horizon >= 1");
  if (!(A >= 0) || !(B > A))
    throw InvalidInputError("growth_inequality_check: need 0 <= A < B");

  auto floor_mul = [](const Rat& r, std::int64_t n) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), Int(r.get_num() * n).get_mpz_t(),
               r.get_den().get_mpz_t());
    return q.get_si();
  };
  auto ceil_mul = [](const Rat& r, std::int64_t n) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), Int(r.get_num() * n).get_mpz_t(),
               r.get_den().get_mpz_t());
    return q.get_si();
  };

  std::int64_t needH = floor_mul(B, horizon);
  if (static_cast<std::int64_t>(aG.size()) <= horizon)
    throw InvalidInputError("growth_inequality_check: aG does not cover [1," +
                            std::to_string(horizon) + "]");
  if (static_cast<std::int64_t>(sH.size()) <= needH)
    throw InvalidInputError("growth_inequality_check: sH does not cover [1," +
                            std::to_string(needH) + "]");

  GrowthCheckReport rep;
  rep.per_n.assign(horizon + 1, true);
  rep.holds = true;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    std::int64_t hi = floor_mul(B, n);
    std::int64_t lo = ceil_mul(A, n);
    std::uint64_t slo = lo >= 1 ? sH[lo] : 0;
    bool ok = aG[n] <= sH[hi] - slo;
    rep.per_n[n] = ok;
    if (!ok) {
      rep.holds = false;
      if (!rep.first_violation) rep.first_violation = n;
    }
  }
  return rep;
}

}  // namespace boxlab
