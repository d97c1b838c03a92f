#pragma once

// Box-space assembly: filtration schedules, per-component metrics,
// coarse-union offsets, D_alpha checks and estimates, expansion reports.

#include <optional>
#include <string>
#include <vector>

#include "boxlab/arith.hpp"
#include "boxlab/cayley.hpp"
#include "boxlab/group.hpp"

namespace boxlab {

enum class ScheduleKind { Z, SolCongruence, Lamplighter, SLCongruence, ZxZ2 };

// A schedule of nested finite-index normal subgroups, given by family.
struct Filtration {
  ScheduleKind kind;
  arith::Rat s = 1;        // Z / SL rate: modulus N_k(s) = 2^[ks]
  std::int64_t base = 0;   // Sol: modulus base^k; SL: prime power base^k
  int sl_m = 0;

  static Filtration z(arith::Rat rate) {
    Filtration f{ScheduleKind::Z};
    f.s = std::move(rate);
    return f;
  }
  static Filtration sol(std::int64_t b) {
    Filtration f{ScheduleKind::SolCongruence};
    f.base = b;
    return f;
  }
  static Filtration lamplighter() { return {ScheduleKind::Lamplighter}; }
  static Filtration sl(int m, std::int64_t p) {
    Filtration f{ScheduleKind::SLCongruence};
    f.sl_m = m;
    f.base = p;
    return f;
  }
  static Filtration zxz2() { return {ScheduleKind::ZxZ2}; }

  std::string to_string() const;
};

// The first `count` quotient specs of the schedule. Throws BudgetError naming
// the first component whose order exceeds max_order.
std::vector<GroupSpec> components(const Filtration& f, int count,
                                  std::uint64_t max_order = 1u << 20);

struct FiltrationReport {
  bool nested_ok = false;
  bool strict_ok = false;
  // Minimal word length of a nontrivial element of the k-th subgroup found
  // within radius R; nullopt means none found ("> R").
  std::vector<std::optional<int>> injectivity_radius;
  bool radius_nondecreasing = false;  // nullopt treated as "> R"
  int radius = 0;
};

// Nestedness, strictness and injectivity-radius evidence for the schedules
// whose parents have exact arithmetic (Z, SOL, lamplighter).
FiltrationReport verify_filtration(const Filtration& f, int count, int R);

// Greedy offsets realizing the coarse-union metric rule
// d(X_m, X_n) >= max(diam X_m, diam X_n); verified post hoc for all pairs.
std::vector<std::int64_t> coarse_union_offsets(
    const std::vector<std::int32_t>& diameters);

struct DAlphaParams {
  arith::Rat alpha;  // in (0, 1]
  arith::Rat K;      // > 0
};

struct DAlphaResult {
  std::vector<bool> per_component;
  bool verdict = false;
};

// diam >= K * order^alpha per component, by exact rational comparison.
DAlphaResult dalpha_check(const std::vector<GraphMetrics>& metrics,
                          const DAlphaParams& p);

// min over components of diam / order^alpha (floating point).
double measured_min_ratio(const std::vector<GraphMetrics>& metrics,
                          const arith::Rat& alpha);

struct DAlphaEstimate {
  double alpha_hat = 0;
  double k_hat = 0;
  std::vector<double> residuals;
};

// Least-squares slope of log(diam) against log(order).
DAlphaEstimate dalpha_estimate(const std::vector<GraphMetrics>& metrics);

struct ExpansionReport {
  double min_cheeger_lower = 0;
  // Fitted slope of log(cheeger_upper) vs log(order); ~ -1 for cycles.
  std::optional<double> decay_exponent;
  bool expansion_fails = false;
  bool non_conclusive = true;  // desk-scale evidence, never a theorem
  std::string verdict;
};

ExpansionReport expansion_report(const std::vector<GraphMetrics>& metrics);

// CSV rows in the schema:
// k,family,params,order,diameter,girth,lambda1,cheeger_lower,cheeger_upper,
// diam_over_order_alpha
std::string metrics_csv(const std::vector<GroupSpec>& specs,
                        const std::vector<GraphMetrics>& metrics,
                        const arith::Rat& alpha);

}  // namespace boxlab
