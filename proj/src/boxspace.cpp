#include "boxlab/boxspace.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "boxlab/poly_f2.hpp"

namespace boxlab {

namespace {

using arith::Int;
using arith::Rat;

Int int_pow(std::int64_t base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Closed-form order of the k-th component (1-based) without building it.
Int component_order(const Filtration& f, int k) {
  switch (f.kind) {
    case ScheduleKind::Z:
      return arith::nks(f.s, k);
    case ScheduleKind::SolCongruence: {
      Int N = int_pow(f.base, k);
      if (N * N > (Int(1) << 40)) return N * N;  // already over any sane budget
      return N * N * static_cast<unsigned long>(arith::pisano(N));
    }
    case ScheduleKind::Lamplighter: {
      if (k > 5) throw BudgetError("lamplighter schedule: k > 5 unsupported");
      int deg = 0;
      for (int i = 1; i <= k; ++i) deg += static_cast<int>(arith::nth_prime(i));
      return (Int(1) << deg) * arith::ell(k);
    }
    case ScheduleKind::SLCongruence:
      return arith::sl_order_prime_power(f.sl_m, f.base, k);
    case ScheduleKind::ZxZ2:
      return Int(2) << k;  // quotient by <(2^k, 0)>
  }
  throw InvalidInputError("unknown schedule kind");
}

GroupSpec component_spec(const Filtration& f, int k) {
  switch (f.kind) {
    case ScheduleKind::Z: {
      Int n = arith::nks(f.s, k);
      if (!n.fits_slong_p())
        throw BudgetError("Z schedule: modulus exceeds 64-bit range");
      return GroupSpec::cyclic(n.get_si());
    }
    case ScheduleKind::SolCongruence: {
      Int N = int_pow(f.base, k);
      if (!N.fits_slong_p())
        throw BudgetError("Sol schedule: modulus exceeds 64-bit range");
      return GroupSpec::sol_quotient(N.get_si());
    }
    case ScheduleKind::Lamplighter:
      return GroupSpec::lamplighter_congruence(k);
    case ScheduleKind::SLCongruence: {
      Int N = int_pow(f.base, k);
      if (!N.fits_slong_p())
        throw BudgetError("SL schedule: modulus exceeds 64-bit range");
      return GroupSpec::sl(f.sl_m, N.get_si());
    }
    case ScheduleKind::ZxZ2: {
      Int n = Int(1) << k;
      if (!n.fits_slong_p())
        throw BudgetError("ZxZ2 schedule: modulus exceeds 64-bit range");
      return GroupSpec::zxz2_quotient(n.get_si(), 0);
    }
  }
  throw InvalidInputError("unknown schedule kind");
}

// Canonical reduction map from component k+1 onto component k.
Elt reduce_to(const Filtration& f, int k, const Elt& e) {
  switch (f.kind) {
    case ScheduleKind::Z: {
      std::int64_t n = arith::nks(f.s, k).get_si();
      return {((e[0] % n) + n) % n};
    }
    case ScheduleKind::SolCongruence: {
      std::int64_t N = int_pow(f.base, k).get_si();
      auto delta = static_cast<std::int64_t>(arith::pisano(N));
      return {e[0] % N, e[1] % N, e[2] % delta};
    }
    case ScheduleKind::Lamplighter: {
      auto m = f2::primitive_product(k);
      std::int64_t ellk = arith::ell(k).get_si();
      return {static_cast<std::int64_t>(
                  f2::mod(static_cast<f2::Poly>(e[0]), m)),
              e[1] % ellk};
    }
    case ScheduleKind::ZxZ2: {
      // Component k is Z/2^k x Z/2, encoded (x, t).
      std::int64_t n = std::int64_t(1) << k;
      return {e[0] % n, e[1]};
    }
    default:
      throw InvalidInputError("no reduction map for this schedule");
  }
}

// BFS ball of radius R on a (possibly infinite) group, with distances.
std::unordered_map<Elt, int, EltHash> ball_with_distances(
    const Group& g, int R, std::uint64_t max_size = 1u << 22) {
  std::unordered_map<Elt, int, EltHash> dist{{g.identity(), 0}};
  std::deque<Elt> frontier{g.identity()};
  auto gens = g.generators();
  while (!frontier.empty()) {
    Elt v = frontier.front();
    frontier.pop_front();
    int d = dist.at(v);
    if (d == R) continue;
    for (const Elt& s : gens) {
      Elt w = g.multiply(v, s);
      if (dist.emplace(w, d + 1).second) {
        if (dist.size() > max_size)
          throw BudgetError("ball_with_distances: ball exceeds budget");
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

double log_of(const Int& n) { return std::log(n.get_d()); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::string Filtration::to_string() const {
  switch (kind) {
    case ScheduleKind::Z:
      return "Z(s=" + s.get_str() + ")";
    case ScheduleKind::SolCongruence:
      return "Sol(base=" + std::to_string(base) + ")";
    case ScheduleKind::Lamplighter:
      return "Lamplighter";
    case ScheduleKind::SLCongruence:
      return "SL(" + std::to_string(sl_m) + ",p=" + std::to_string(base) + ")";
    case ScheduleKind::ZxZ2:
      return "ZxZ2";
  }
  return "?";
}

std::vector<GroupSpec> components(const Filtration& f, int count,
                                  std::uint64_t max_order) {
  if (count < 1) throw InvalidInputError("components: count must be >= 1");
  std::vector<GroupSpec> out;
  for (int k = 1; k <= count; ++k) {
    if (component_order(f, k) > static_cast<unsigned long>(max_order))
      throw BudgetError("components: component " + std::to_string(k) +
                        " exceeds the order budget");
    out.push_back(component_spec(f, k));
  }
  return out;
}

FiltrationReport verify_filtration(const Filtration& f, int count, int R) {
  if (count < 1) throw InvalidInputError("verify_filtration: count >= 1");
  if (f.kind == ScheduleKind::SLCongruence)
    throw InvalidInputError(
        "verify_filtration: no exact parent arithmetic for the SL schedule");

  FiltrationReport report;
  report.radius = R;

  // (a) Nestedness: the reduction k+1 -> k must respect generators and be a
  // homomorphism on all products of radius-2 ball elements.
  for (int k = 1; k < count; ++k) {
    auto big = make_group(component_spec(f, k + 1));
    auto small = make_group(component_spec(f, k));
    auto gens_big = big->generators();
    auto gens_small = small->generators();
    if (gens_big.size() != gens_small.size())
      throw VerificationError("verify_filtration: generator count mismatch at k=" +
                              std::to_string(k));
    for (std::size_t i = 0; i < gens_big.size(); ++i)
      if (reduce_to(f, k, gens_big[i]) != gens_small[i])
        throw VerificationError(
            "verify_filtration: generator image mismatch at k=" +
            std::to_string(k));
    auto ball = ball_with_distances(*big, 2, 1u << 16);
    for (const auto& [a, da] : ball)
      for (const auto& [b, db] : ball)
        if (reduce_to(f, k, big->multiply(a, b)) !=
            small->multiply(reduce_to(f, k, a), reduce_to(f, k, b)))
          throw VerificationError(
              "verify_filtration: projection not a homomorphism at k=" +
              std::to_string(k));
  }
  report.nested_ok = true;

  // (b) Strictness: orders strictly increase.
  report.strict_ok = true;
  for (int k = 1; k < count; ++k)
    if (!(component_order(f, k) < component_order(f, k + 1)))
      report.strict_ok = false;

  // (c) Injectivity radius per k via truncated parent BFS.
  std::unique_ptr<ParentGroup> parent;
  switch (f.kind) {
    case ScheduleKind::Z: {
      std::vector<std::int64_t> moduli;
      for (int k = 1; k <= count; ++k) {
        Int n = arith::nks(f.s, k);
        moduli.push_back(n.fits_slong_p() ? n.get_si()
                                          : std::int64_t(1) << 62);
      }
      parent = std::make_unique<ZParent>(std::move(moduli));
      break;
    }
    case ScheduleKind::SolCongruence:
      parent = std::make_unique<SolParent>(f.base);
      break;
    case ScheduleKind::Lamplighter:
      parent = std::make_unique<LamplighterParent>();
      break;
    default:
      throw InvalidInputError(
          "verify_filtration: no exact parent arithmetic for this schedule");
  }
  auto ball = ball_with_distances(*parent, R);
  Elt id = parent->identity();
  for (int k = 1; k <= count; ++k) {
    std::optional<int> best;
    for (const auto& [e, d] : ball) {
      if (e == id) continue;
      if (!parent->in_filtration_subgroup(e, k)) continue;
      if (!best || d < *best) best = d;
    }
    report.injectivity_radius.push_back(best);
  }
  report.radius_nondecreasing = true;
  for (int k = 1; k < count; ++k) {
    const auto& a = report.injectivity_radius[k - 1];
    const auto& b = report.injectivity_radius[k];
    int va = a ? *a : R + 1, vb = b ? *b : R + 1;
    if (vb < va) report.radius_nondecreasing = false;
  }
  return report;
}

std::vector<std::int64_t> coarse_union_offsets(
    const std::vector<std::int32_t>& diameters) {
  if (diameters.empty())
    throw InvalidInputError("coarse_union_offsets: empty input");
  std::vector<std::int64_t> offsets{0};
  for (std::size_t k = 1; k < diameters.size(); ++k)
    offsets.push_back(offsets.back() + diameters[k - 1] +
                      std::max(diameters[k - 1], diameters[k]));
  // Post hoc: pairwise gaps dominate both diameters.
  for (std::size_t i = 0; i < diameters.size(); ++i)
    for (std::size_t j = i + 1; j < diameters.size(); ++j) {
      std::int64_t gap = offsets[j] - (offsets[i] + diameters[i]);
      if (gap < std::max(diameters[i], diameters[j]))
        throw VerificationError("coarse_union_offsets: gap rule violated");
    }
  return offsets;
}

DAlphaResult dalpha_check(const std::vector<GraphMetrics>& metrics,
                          const DAlphaParams& p) {
  if (!(p.alpha > 0 && p.alpha <= 1))
    throw InvalidInputError("dalpha_check: alpha must be in (0, 1]");
  if (!(p.K > 0)) throw InvalidInputError("dalpha_check: K must be positive");
  Int a = p.alpha.get_num(), b = p.alpha.get_den();
  Int kp = p.K.get_num(), kq = p.K.get_den();
  DAlphaResult out;
  out.verdict = true;
  for (const auto& m : metrics) {
    // diam >= K * order^(a/b)  <=>  (diam * kq)^b >= kp^b * order^a.
    Int lhs, rhs, t;
    mpz_pow_ui(lhs.get_mpz_t(), Int(Int(m.diameter) * kq).get_mpz_t(),
               b.get_ui());
    mpz_pow_ui(rhs.get_mpz_t(), kp.get_mpz_t(), b.get_ui());
    mpz_ui_pow_ui(t.get_mpz_t(), m.order, a.get_ui());
    rhs *= t;
    bool ok = lhs >= rhs;
    out.per_component.push_back(ok);
    if (!ok) out.verdict = false;
  }
  return out;
}

double measured_min_ratio(const std::vector<GraphMetrics>& metrics,
                          const Rat& alpha) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : metrics)
    best = std::min(best, m.diameter / std::pow(double(m.order),
                                                alpha.get_d()));
  return best;
}

DAlphaEstimate dalpha_estimate(const std::vector<GraphMetrics>& metrics) {
  if (metrics.size() < 2)
    throw InvalidInputError("dalpha_estimate: need >= 2 components");
  bool distinct = false;
  for (std::size_t i = 1; i < metrics.size(); ++i)
    if (metrics[i].order != metrics[0].order) distinct = true;
  if (!distinct)
    throw InvalidInputError("dalpha_estimate: all component orders equal");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = metrics.size();
  for (const auto& m : metrics) {
    double x = std::log(double(m.order)), y = std::log(double(m.diameter));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  DAlphaEstimate est;
  est.alpha_hat = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  est.k_hat = std::numeric_limits<double>::infinity();
  for (const auto& m : metrics)
    est.k_hat = std::min(
        est.k_hat, m.diameter / std::pow(double(m.order), est.alpha_hat));
  for (const auto& m : metrics) {
    double pred = est.k_hat * std::pow(double(m.order), est.alpha_hat);
    est.residuals.push_back(std::log(double(m.diameter)) - std::log(pred));
  }
  return est;
}

ExpansionReport expansion_report(const std::vector<GraphMetrics>& metrics) {
  ExpansionReport rep;
  if (metrics.empty()) {
    rep.verdict = "no components";
    return rep;
  }
  rep.min_cheeger_lower = std::numeric_limits<double>::infinity();
  for (const auto& m : metrics)
    rep.min_cheeger_lower = std::min(rep.min_cheeger_lower, m.cheeger_lower);

  if (metrics.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = metrics.size();
    for (const auto& m : metrics) {
      double x = std::log(double(m.order));
      double y = std::log(std::max(m.cheeger_upper, 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) > 1e-12)
      rep.decay_exponent = (n * sxy - sx * sy) / denom;
  }
  // "Fails empirically" when the Cheeger upper bound trend decays roughly
  // like a negative power of the order.
  rep.expansion_fails =
      rep.decay_exponent.has_value() && *rep.decay_exponent < -0.5;
  rep.verdict = rep.expansion_fails
                    ? "expansion fails empirically (decay exponent " +
                          fmt(*rep.decay_exponent) + ")"
                    : "no expansion counterexample up to k=" +
                          std::to_string(metrics.size()) +
                          " (min Cheeger lower bound " +
                          fmt(rep.min_cheeger_lower) + ")";
  rep.non_conclusive = true;
  return rep;
}

std::string metrics_csv(const std::vector<GroupSpec>& specs,
                        const std::vector<GraphMetrics>& metrics,
                        const Rat& alpha) {
  if (specs.size() != metrics.size())
    throw InvalidInputError("metrics_csv: specs/metrics length mismatch");
  std::ostringstream os;
  os << "k,family,params,order,diameter,girth,lambda1,cheeger_lower,"
        "cheeger_upper,diam_over_order_alpha\n";
  os.precision(12);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& m = metrics[i];
    os << (i + 1) << "," << specs[i].family_name() << ",";
    for (std::size_t j = 0; j < specs[i].params.size(); ++j) {
      if (j) os << ";";
      os << specs[i].params[j];
    }
    os << "," << m.order << "," << m.diameter << ",";
    if (m.girth)
      os << *m.girth;
    else
      os << "inf";
    os << "," << m.lambda1 << "," << m.cheeger_lower << "," << m.cheeger_upper
       << "," << m.diameter / std::pow(double(m.order), alpha.get_d()) << "\n";
  }
  return os.str();
}

}  // namespace boxlab
