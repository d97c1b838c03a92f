#include "boxlab/wreath_iso.hpp"

#include <algorithm>
#include <sstream>

#include "boxlab/cayley.hpp"

namespace boxlab {

void LampBijection::validate() const {
  std::array<bool, 4> seen{};
  for (int v : to) {
    if (v < 0 || v > 3 || seen[v])
      throw InvalidInputError("LampBijection: table is not a bijection");
    seen[v] = true;
  }
}

int LampBijection::inverse_of(int w) const {
  for (int v = 0; v < 4; ++v)
    if (to[v] == w) return v;
  throw InvalidInputError("LampBijection: value outside range");
}

std::vector<LampBijection> LampBijection::all_identity_fixing() {
  std::vector<LampBijection> out;
  std::array<int, 3> perm = {1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    out.push_back({{0, perm[0], perm[1], perm[2]}});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Elt induced_map(const LampBijection& b, std::int64_t n, const Elt& g) {
  Elt out(n + 1);
  for (std::int64_t i = 0; i < n; ++i) out[i] = b.to[g[i]];
  out[n] = g[n];
  return out;
}

Elt induced_map_inverse(const LampBijection& b, std::int64_t n, const Elt& g) {
  Elt out(n + 1);
  for (std::int64_t i = 0; i < n; ++i) out[i] = b.inverse_of(static_cast<int>(g[i]));
  out[n] = g[n];
  return out;
}

namespace {

Elt element_at(std::int64_t n, std::uint64_t idx) {
  Elt g(n + 1);
  g[n] = static_cast<std::int64_t>(idx % n);
  idx /= n;
  for (std::int64_t i = 0; i < n; ++i) {
    g[i] = static_cast<std::int64_t>(idx & 3);
    idx >>= 2;
  }
  return g;
}

// True iff every edge out of g maps to an edge and every edge out of the
// image pulls back to an edge.
bool element_ok(const LampBijection& b, std::int64_t n, const Group& src,
                const Group& dst, const std::vector<Elt>& sgens,
                const std::vector<Elt>& dgens, const Elt& g) {
  Elt mg = induced_map(b, n, g);
  for (const Elt& s : sgens) {
    Elt img = induced_map(b, n, src.multiply(g, s));
    bool adjacent = false;
    for (const Elt& t : dgens)
      if (dst.multiply(mg, t) == img) {
        adjacent = true;
        break;
      }
    if (!adjacent) return false;
  }
  for (const Elt& t : dgens) {
    Elt pre = induced_map_inverse(b, n, dst.multiply(mg, t));
    bool adjacent = false;
    for (const Elt& s : sgens)
      if (src.multiply(g, s) == pre) {
        adjacent = true;
        break;
      }
    if (!adjacent) return false;
  }
  return true;
}

IsoReport verify_impl(const LampBijection& b, int n, bool parallel) {
  b.validate();
  if (n < 1 || n > 8)
    throw BudgetError("verify_isomorphism: n must be in [1, 8]");

  auto src = make_group(GroupSpec::wreath(LampType::Z4, n));
  auto dst = make_group(GroupSpec::wreath(LampType::Z2xZ2, n));
  auto sgens = src->generators();
  auto dgens = dst->generators();

  IsoReport rep;
  rep.elements = src->order();

  Elt id = src->identity();
  if (induced_map(b, n, id) != dst->identity()) {
    rep.ok = false;
    rep.failure = "basepoint";
    rep.witness_source = id;
    rep.witness_image = induced_map(b, n, id);
    return rep;
  }

  const std::int64_t total = static_cast<std::int64_t>(rep.elements);
  std::int64_t first_bad = total;
#pragma omp parallel for schedule(dynamic, 4096) reduction(min : first_bad) \
    if (parallel)
  for (std::int64_t e = 0; e < total; ++e) {
    Elt g = element_at(n, static_cast<std::uint64_t>(e));
    if (!element_ok(b, n, *src, *dst, sgens, dgens, g))
      first_bad = std::min(first_bad, e);
  }

  rep.edges_checked = rep.elements * sgens.size() * 2;
  if (first_bad < total) {
    rep.ok = false;
    rep.failure = "edge";
    Elt g = element_at(n, static_cast<std::uint64_t>(first_bad));
    rep.witness_source = g;
    rep.witness_image = induced_map(b, n, g);
  } else {
    rep.ok = true;
  }
  return rep;
}

}  // namespace

IsoReport verify_isomorphism(const LampBijection& b, int n) {
  return verify_impl(b, n, true);
}

IsoReport verify_isomorphism_serial(const LampBijection& b, int n) {
  return verify_impl(b, n, false);
}

std::string IsoReport::to_json(double elapsed_seconds) const {
  std::ostringstream os;
  os.precision(6);
  os << "{\"ok\":" << (ok ? "true" : "false") << ",\"elements\":" << elements
     << ",\"edges_checked\":" << edges_checked;
  if (!ok) os << ",\"failure\":\"" << failure << "\"";
  os << ",\"elapsed_seconds\":" << elapsed_seconds << "}";
  return os.str();
}

std::vector<std::uint64_t> distance_spectrum(const GroupSpec& spec,
                                             std::uint64_t budget) {
  auto g = build_cayley(*make_group(spec), budget);
  std::int32_t diam = 0;
  for (auto d : g.dist) diam = std::max(diam, d);
  std::vector<std::uint64_t> hist(diam + 1, 0);
  for (auto d : g.dist) ++hist[d];
  return hist;
}

}  // namespace boxlab
