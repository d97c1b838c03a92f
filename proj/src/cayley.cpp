#include "boxlab/cayley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <Eigen/Dense>

namespace boxlab {

CayleyGraph build_cayley(const FiniteGroup& group, std::uint64_t max_size) {
  std::uint64_t n = group.order();
  if (n > max_size)
    throw BudgetError("build_cayley: group order " + std::to_string(n) +
                      " exceeds budget " + std::to_string(max_size));
  auto gens = group.generators();
  CayleyGraph g;
  g.spec = group.spec();
  g.degree = static_cast<std::uint32_t>(gens.size());

  std::unordered_map<Elt, std::int32_t, EltHash> index;
  index.reserve(n * 2);
  g.vertices.reserve(n);
  g.adjacency.resize(n * gens.size(), -1);
  g.dist.reserve(n);

  Elt id = group.identity();
  index.emplace(id, 0);
  g.vertices.push_back(id);
  g.dist.push_back(0);

  std::deque<std::int32_t> queue{0};
  while (!queue.empty()) {
    std::int32_t v = queue.front();
    queue.pop_front();
    Elt ev = g.vertices[v];  // copy: vertices may reallocate below
    for (std::uint32_t gi = 0; gi < g.degree; ++gi) {
      Elt w = group.multiply(ev, gens[gi]);
      auto [it, inserted] = index.emplace(std::move(w), g.vertices.size());
      if (inserted) {
        if (g.vertices.size() >= n)
          throw VerificationError(
              "build_cayley: BFS exceeded the closed-form group order");
        g.vertices.push_back(it->first);
        g.dist.push_back(g.dist[v] + 1);
        queue.push_back(it->second);
      }
      g.adjacency[static_cast<std::size_t>(v) * g.degree + gi] = it->second;
    }
  }
  if (g.vertices.size() != n)
    throw VerificationError(
        "build_cayley: generating set does not generate the group (" +
        std::to_string(g.vertices.size()) + " of " + std::to_string(n) + ")");

  // Pair each generator index with an inverse-generator index (greedy, so
  // duplicate generators pair among themselves deterministically).
  g.gen_inverse.assign(g.degree, -1);
  for (std::uint32_t i = 0; i < g.degree; ++i) {
    if (g.gen_inverse[i] != -1) continue;
    Elt inv = group.inverse(gens[i]);
    for (std::uint32_t j = i; j < g.degree; ++j) {
      if (g.gen_inverse[j] == -1 && gens[j] == inv) {
        g.gen_inverse[i] = static_cast<std::int32_t>(j);
        g.gen_inverse[j] = static_cast<std::int32_t>(i);
        break;
      }
    }
    if (g.gen_inverse[i] == -1)
      throw VerificationError("build_cayley: generating set is not symmetric");
  }
  return g;
}

std::int32_t diameter(const CayleyGraph& g) {
  return *std::max_element(g.dist.begin(), g.dist.end());
}

namespace {

std::int32_t eccentricity(const CayleyGraph& g, std::int32_t src,
                          std::vector<std::int32_t>& dist,
                          std::vector<std::int32_t>& frontier,
                          std::vector<std::int32_t>& next) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[src] = 0;
  frontier.clear();
  frontier.push_back(src);
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    next.clear();
    for (std::int32_t v : frontier) {
      const std::int32_t* row = &g.adjacency[static_cast<std::size_t>(v) * g.degree];
      for (std::uint32_t gi = 0; gi < g.degree; ++gi) {
        std::int32_t w = row[gi];
        if (dist[w] < 0) {
          dist[w] = depth + 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
    if (!frontier.empty()) ++depth;
  }
  return depth;
}

}  // namespace

std::int32_t diameter_all_pairs_serial(const CayleyGraph& g) {
  std::int64_t n = static_cast<std::int64_t>(g.order());
  std::vector<std::int32_t> dist(n), frontier, next;
  std::int32_t diam = 0;
  for (std::int32_t s = 0; s < n; ++s)
    diam = std::max(diam, eccentricity(g, s, dist, frontier, next));
  return diam;
}

std::int32_t diameter_all_pairs(const CayleyGraph& g) {
  std::int64_t n = static_cast<std::int64_t>(g.order());
  std::int32_t diam = 0;
#pragma omp parallel
  {
    std::vector<std::int32_t> dist(n), frontier, next;
    std::int32_t local = 0;
#pragma omp for schedule(dynamic, 16)
    for (std::int32_t s = 0; s < n; ++s)
      local = std::max(local, eccentricity(g, s, dist, frontier, next));
#pragma omp critical
    diam = std::max(diam, local);
  }
  return diam;
}

std::optional<std::int32_t> girth(const CayleyGraph& g) {
  // Non-backtracking BFS over (vertex, incoming generator) states, started
  // from the identity's out-edges; the first return to the identity gives the
  // girth (valid through any vertex of a vertex-transitive graph).
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  const std::uint32_t d = g.degree;
  for (std::uint32_t gi = 0; gi < d; ++gi)
    if (g.neighbor(0, gi) == 0) return 1;  // loop

  std::vector<std::int32_t> depth(n * d, -1);
  std::deque<std::int64_t> queue;
  for (std::uint32_t gi = 0; gi < d; ++gi) {
    std::int64_t state = static_cast<std::int64_t>(g.neighbor(0, gi)) * d + gi;
    if (depth[state] < 0) {
      depth[state] = 1;
      queue.push_back(state);
    }
  }
  while (!queue.empty()) {
    std::int64_t state = queue.front();
    queue.pop_front();
    std::int32_t v = static_cast<std::int32_t>(state / d);
    std::uint32_t in = static_cast<std::uint32_t>(state % d);
    for (std::uint32_t gi = 0; gi < d; ++gi) {
      if (gi == static_cast<std::uint32_t>(g.gen_inverse[in])) continue;
      std::int32_t w = g.neighbor(v, gi);
      if (w == 0) return depth[state] + 1;
      std::int64_t next = static_cast<std::int64_t>(w) * d + gi;
      if (depth[next] < 0) {
        depth[next] = depth[state] + 1;
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> ball_growth(const Group& group, int R,
                                       std::uint64_t max_size) {
  std::unordered_map<Elt, int, EltHash> seen;
  std::vector<Elt> frontier{group.identity()};
  seen.emplace(frontier[0], 0);
  auto gens = group.generators();
  std::vector<std::uint64_t> sizes{1};
  for (int r = 1; r <= R; ++r) {
    std::vector<Elt> next;
    for (const Elt& v : frontier) {
      for (const Elt& s : gens) {
        Elt w = group.multiply(v, s);
        auto [it, inserted] = seen.emplace(std::move(w), r);
        if (inserted) {
          next.push_back(it->first);
          if (seen.size() > max_size)
            throw BudgetError("ball_growth: ball exceeds budget");
        }
      }
    }
    sizes.push_back(seen.size());
    frontier = std::move(next);
  }
  return sizes;
}

namespace {

double cheeger_scan(const CayleyGraph& g, std::uint64_t lo, std::uint64_t hi) {
  const int n = static_cast<int>(g.order());
  const std::uint32_t d = g.degree;
  const int half = n / 2;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    int pc = std::popcount(mask);
    if (pc == 0 || pc > half) continue;
    std::uint64_t boundary = 0;
    std::uint64_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      const std::int32_t* row = &g.adjacency[static_cast<std::size_t>(v) * d];
      for (std::uint32_t gi = 0; gi < d; ++gi)
        boundary += !((mask >> row[gi]) & 1);
    }
    double ratio = static_cast<double>(boundary) / pc;
    best = std::min(best, ratio);
  }
  return best;
}

}  // namespace

double cheeger_exact_serial(const CayleyGraph& g, int max_order) {
  const int n = static_cast<int>(g.order());
  if (n < 2 || n > max_order)
    throw BudgetError("cheeger_exact: order out of exhaustive range");
  return cheeger_scan(g, 1, std::uint64_t{1} << n);
}

double cheeger_exact(const CayleyGraph& g, int max_order) {
  const int n = static_cast<int>(g.order());
  if (n < 2 || n > max_order)
    throw BudgetError("cheeger_exact: order out of exhaustive range");
  const std::uint64_t total = std::uint64_t{1} << n;
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel
  {
    double local = std::numeric_limits<double>::infinity();
#pragma omp for schedule(static)
    for (std::int64_t chunk = 0; chunk < 1024; ++chunk) {
      std::uint64_t lo = 1 + (total - 1) * chunk / 1024;
      std::uint64_t hi = 1 + (total - 1) * (chunk + 1) / 1024;
      local = std::min(local, cheeger_scan(g, lo, hi));
    }
#pragma omp critical
    best = std::min(best, local);
  }
  return best;
}

namespace {

// y = x + A x / d, the positive-shifted walk operator. Eigenvalues lie in
// [0, 2]; the top eigenvector is constant.
void walk_matvec(const CayleyGraph& g, const std::vector<double>& x,
                 std::vector<double>& y) {
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  const std::uint32_t d = g.degree;
  const double invd = 1.0 / d;
#pragma omp parallel for schedule(static) if (n > 4096)
  for (std::int64_t v = 0; v < n; ++v) {
    const std::int32_t* row = &g.adjacency[static_cast<std::size_t>(v) * d];
    double acc = 0;
    for (std::uint32_t gi = 0; gi < d; ++gi) acc += x[row[gi]];
    y[v] = x[v] + acc * invd;
  }
}

void remove_mean(std::vector<double>& x) {
  double mean = 0;
  for (double v : x) mean += v;
  mean /= x.size();
  for (double& v : x) v -= mean;
}

double norm(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

double spectral_gap(const CayleyGraph& g, double tol) {
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  if (n < 2) throw InvalidInputError("spectral_gap: need at least 2 vertices");
  // Deterministic start: first coordinate vector, deflated against constants.
  std::vector<double> x(n, 0.0), y(n);
  x[0] = 1.0;
  remove_mean(x);
  double nx = norm(x);
  for (double& v : x) v /= nx;

  const std::int64_t max_iters = 2'000'000;
  double theta = 0, residual = 0;
  for (std::int64_t it = 0; it < max_iters; ++it) {
    walk_matvec(g, x, y);
    remove_mean(y);
    theta = 0;
    for (std::int64_t i = 0; i < n; ++i) theta += x[i] * y[i];
    double r2 = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      double diff = y[i] - theta * x[i];
      r2 += diff * diff;
    }
    residual = std::sqrt(r2);
    double ny = norm(y);
    // For a symmetric operator, |theta - lambda| <= residual.
    if (ny == 0.0 || residual <= tol * 0.5) return 2.0 - theta;
    for (std::int64_t i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  throw ConvergenceError("spectral_gap: power iteration did not converge",
                         residual);
}

namespace {

Eigen::MatrixXd adjacency_dense(const CayleyGraph& g) {
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::int64_t v = 0; v < n; ++v)
    for (std::uint32_t gi = 0; gi < g.degree; ++gi)
      a(v, g.neighbor(v, gi)) += 1.0;
  return a;
}

}  // namespace

double spectral_gap_dense(const CayleyGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_dense(g));
  const auto& ev = es.eigenvalues();  // ascending
  double mu2 = ev(ev.size() - 2);
  return 1.0 - mu2 / g.degree;
}

double adjacency_mu2_dense(const CayleyGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_dense(g));
  const auto& ev = es.eigenvalues();
  return ev(ev.size() - 2);
}

GraphMetrics compute_metrics(const CayleyGraph& g, bool want_girth,
                             bool want_spectral, double tol) {
  GraphMetrics m;
  m.order = g.order();
  m.degree = g.degree;
  m.diameter = diameter(g);
  if (want_girth) m.girth = girth(g);
  if (want_spectral) {
    // Dense below the crossover (cheap and immune to tiny eigengaps, as on
    // long cycles); deflated power iteration above it.
    m.lambda1 = m.order <= 1200 ? spectral_gap_dense(g) : spectral_gap(g, tol);
    m.cheeger_lower = g.degree * m.lambda1 / 2.0;
    m.cheeger_upper = g.degree * std::sqrt(2.0 * m.lambda1);
  }
  if (m.order >= 2 && m.order <= 22) m.cheeger_exact = cheeger_exact(g);
  return m;
}

std::vector<std::pair<int, std::int32_t>> central_distortion_heisenberg(int k) {
  if (k < 1 || k > 6)
    throw BudgetError("central_distortion_heisenberg: k out of range [1,6]");
  std::vector<std::pair<int, std::int32_t>> out;
  for (int j = 1; j <= k; ++j) {
    std::int64_t N = std::int64_t{1} << j;
    auto group = make_group(GroupSpec::heisenberg(N));
    CayleyGraph g = build_cayley(*group, 1u << 19);
    Elt central = {0, 0, N / 2};  // top-right entry 2^{j-1}
    auto it = std::find(g.vertices.begin(), g.vertices.end(), central);
    out.emplace_back(j, g.dist[it - g.vertices.begin()]);
  }
  return out;
}

std::string export_edge_list(const CayleyGraph& g) {
  std::ostringstream os;
  os << "boxlab-graph v1\n";
  for (std::uint64_t v = 0; v < g.order(); ++v)
    for (std::uint32_t gi = 0; gi < g.degree; ++gi)
      os << v << " " << g.neighbor(v, gi) << " " << gi << "\n";
  return os.str();
}

}  // namespace boxlab
