#pragma once

// Cayley-graph engine: BFS realization, diameter, girth, ball growth,
// exact Cheeger constants on tiny graphs, spectral gap on larger ones.
//
// The heavy kernels (all-pairs BFS, exhaustive cut search, matvec) have both
// an OpenMP-parallel implementation and a serial reference; tests check the
// two agree and the benchmark tool compares them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxlab/group.hpp"

namespace boxlab {

struct CayleyGraph {
  GroupSpec spec;
  std::uint32_t degree = 0;              // |GenSet|, counting multiplicity
  std::vector<Elt> vertices;             // BFS discovery order, id first
  std::vector<std::int32_t> adjacency;   // vertex * degree + generator index
  std::vector<std::int32_t> dist;        // BFS distance from the identity
  std::vector<std::int32_t> gen_inverse; // pairing of generator indices

  std::uint64_t order() const { return vertices.size(); }
  std::int32_t neighbor(std::int64_t v, std::uint32_t g) const {
    return adjacency[static_cast<std::size_t>(v) * degree + g];
  }
};

// BFS closure from the identity over the generating multiset, in fixed
// generator order. Deterministic vertex numbering. Throws BudgetError if the
// group order exceeds max_size (no partial graph is returned).
CayleyGraph build_cayley(const FiniteGroup& group, std::uint64_t max_size);

// Eccentricity of the identity vertex; equals the graph diameter by vertex
// transitivity (validated against the all-pairs oracle in the tests).
std::int32_t diameter(const CayleyGraph& g);

// All-pairs BFS diameter. Oracle for `diameter`; parallel over sources.
std::int32_t diameter_all_pairs(const CayleyGraph& g);
std::int32_t diameter_all_pairs_serial(const CayleyGraph& g);

// Length of the shortest nontrivial closed walk through the identity with no
// immediate backtracking (loops count as 1, parallel edges as 2). Empty
// optional means acyclic.
std::optional<std::int32_t> girth(const CayleyGraph& g);

// Cumulative ball sizes [|B(0)|, ..., |B(R)|] from the identity. Works for
// any Group (including infinite parents); throws BudgetError if a ball
// exceeds max_size.
std::vector<std::uint64_t> ball_growth(const Group& group, int R,
                                       std::uint64_t max_size = 1u << 22);

// Exact Cheeger constant min |boundary(A)| / |A| over nonempty A with
// |A| <= order/2, by exhaustive subset search. Requires order <= max_order
// (default 22).
double cheeger_exact(const CayleyGraph& g, int max_order = 22);
double cheeger_exact_serial(const CayleyGraph& g, int max_order = 22);

// Second-smallest eigenvalue of the normalized Laplacian (multigraph
// semantics: loops and parallel edges count in both adjacency and degree).
// Deterministic deflated power iteration; absolute tolerance tol.
double spectral_gap(const CayleyGraph& g, double tol = 1e-9);

// Dense-eigendecomposition value of the same quantity (test oracle, and the
// path of choice for very small graphs).
double spectral_gap_dense(const CayleyGraph& g);

// Second-largest adjacency eigenvalue (dense; used by the Cheeger sandwich).
double adjacency_mu2_dense(const CayleyGraph& g);

struct GraphMetrics {
  std::uint64_t order = 0;
  std::uint32_t degree = 0;
  std::int32_t diameter = 0;
  std::optional<std::int32_t> girth;
  double lambda1 = 0.0;
  std::optional<double> cheeger_exact;
  double cheeger_lower = 0.0;  // d * lambda1 / 2
  double cheeger_upper = 0.0;  // d * sqrt(2 * lambda1)
};

GraphMetrics compute_metrics(const CayleyGraph& g, bool want_girth = true,
                             bool want_spectral = true, double tol = 1e-9);

// Word length of the central element with top-right entry 2^{j-1} in
// Heis(Z/2^j), for each j = 1..k. k <= 6.
std::vector<std::pair<int, std::int32_t>> central_distortion_heisenberg(int k);

// Edge-list export: header "boxlab-graph v1", then "u v g" triples.
std::string export_edge_list(const CayleyGraph& g);

}  // namespace boxlab
