// boxlab command-line surface: builds quotient graphs and reruns each
// desk-scale verification as a deterministic JSON/CSV report.
//
// Exit codes: 0 success, 1 invalid input, 2 budget exceeded, 3 verification
// failure (a claim check that fails; a finding, not a crash).

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "boxlab/arith.hpp"
#include "boxlab/boxspace.hpp"
#include "boxlab/cayley.hpp"
#include "boxlab/census.hpp"
#include "boxlab/coarse.hpp"
#include "boxlab/group.hpp"
#include "boxlab/verify_all.hpp"
#include "boxlab/wreath_iso.hpp"

using json = nlohmann::json;
using namespace boxlab;
using arith::Int;
using arith::Rat;

namespace {

struct Options {
  std::string family;
  std::int64_t n = 0;
  std::int64_t modulus = 0;
  std::int64_t m = 2;
  std::int64_t k = 1;
  std::int64_t eps = 2;
  std::string lamp = "z4";

  std::string schedule;
  int kmax = 1;
  std::string alpha = "1";
  std::string K;  // empty: use the measured minimum ratio
  bool no_spectral = false;

  std::vector<std::string> nks;
  std::vector<std::string> sl;
  int disp = 8;
  std::string ratio = "65536";
  int horizon = 200;

  std::string group;
  std::int64_t max = 64;
  bool oracle = false;

  bool control = false;

  std::uint64_t max_vertices = 1000000;
  std::string format = "json";
  std::string out;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BOXLAB_MAX_VERTICES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw InvalidInputError("BOXLAB_MAX_VERTICES must be a positive integer");
  }
  return 1000000;
}

GroupSpec spec_from(const Options& o) {
  if (o.family == "cyclic") return GroupSpec::cyclic(o.n);
  if (o.family == "sol") return GroupSpec::sol_quotient(o.modulus);
  if (o.family == "sl") return GroupSpec::sl(o.m, o.modulus);
  if (o.family == "lamplighter")
    return GroupSpec::lamplighter_congruence(o.k);
  if (o.family == "heisenberg") return GroupSpec::heisenberg(o.modulus);
  if (o.family == "zxz2") return GroupSpec::zxz2_quotient(o.n, o.eps);
  if (o.family == "wreath") {
    LampType lamp;
    if (o.lamp == "z2")
      lamp = LampType::Z2;
    else if (o.lamp == "z4")
      lamp = LampType::Z4;
    else if (o.lamp == "z2xz2")
      lamp = LampType::Z2xZ2;
    else
      throw InvalidInputError("--lamp must be z2, z4 or z2xz2");
    return GroupSpec::wreath(lamp, o.n);
  }
  throw InvalidInputError("unknown --family " + o.family);
}

Filtration schedule_from(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "lamplighter") return Filtration::lamplighter();
  if (head == "zxz2") return Filtration::zxz2();
  if (head == "z") return Filtration::z(arith::parse_rational(
      tail.empty() ? "1" : tail));
  if (head == "sol") {
    if (tail.empty()) throw InvalidInputError("sol schedule needs a base");
    return Filtration::sol(std::stoll(tail));
  }
  if (head == "sl") {
    auto comma = tail.find(',');
    if (comma == std::string::npos)
      throw InvalidInputError("sl schedule is sl:m,p");
    return Filtration::sl(std::stoi(tail.substr(0, comma)),
                          std::stoll(tail.substr(comma + 1)));
  }
  throw InvalidInputError("unknown --schedule " + s);
}

json config_json(const Options& o, const std::string& subcommand) {
  json c;
  c["subcommand"] = subcommand;
  c["max_vertices"] = o.max_vertices;
  c["format"] = o.format;
  if (!o.family.empty()) c["family"] = o.family;
  if (!o.schedule.empty()) c["schedule"] = o.schedule;
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) throw InvalidInputError("cannot open output file " + o.out);
    f << text;
  }
}

json metrics_json(const GraphMetrics& m) {
  json j;
  j["order"] = m.order;
  j["degree"] = m.degree;
  j["diameter"] = m.diameter;
  if (m.girth)
    j["girth"] = *m.girth;
  else
    j["girth"] = nullptr;
  j["lambda1"] = m.lambda1;
  j["cheeger_lower"] = m.cheeger_lower;
  j["cheeger_upper"] = m.cheeger_upper;
  if (m.cheeger_exact) j["cheeger_exact"] = *m.cheeger_exact;
  return j;
}

json verdict_json(const MatchingVerdict& v) {
  json j;
  j["status"] = v.status();
  j["matched"] = v.matched;
  j["D"] = v.D;
  j["R"] = v.R.get_str();
  j["H"] = v.H;
  if (v.matched) {
    j["assignment_size"] = v.assignment.size();
  } else {
    j["obstruction_rows"] = v.obstruction_rows;
    j["obstruction_cols"] = v.obstruction_cols;
  }
  return j;
}

std::vector<GraphMetrics> schedule_metrics(const Options& o,
                                           const std::vector<GroupSpec>& specs) {
  std::vector<GraphMetrics> ms;
  for (const auto& spec : specs) {
    auto g = build_cayley(*make_group(spec), o.max_vertices);
    bool spectral = !o.no_spectral && g.order() <= 100000;
    ms.push_back(compute_metrics(g, g.order() <= 100000, spectral));
  }
  return ms;
}

int cmd_quotient(const Options& o) {
  auto g = build_cayley(*make_group(spec_from(o)), o.max_vertices);
  std::string path = o.out.empty() ? "quotient.edges" : o.out;
  {
    std::ofstream f(path);
    if (!f) throw InvalidInputError("cannot open output file " + path);
    f << export_edge_list(g);
  }
  json rep;
  rep["config"] = config_json(o, "quotient");
  rep["spec"] = g.spec.to_string();
  rep["order"] = g.order();
  rep["degree"] = g.degree;
  rep["diameter"] = diameter(g);
  rep["edge_list"] = path;
  std::cout << rep.dump() << "\n";
  return 0;
}

int cmd_metrics(const Options& o) {
  auto g = build_cayley(*make_group(spec_from(o)), o.max_vertices);
  auto m = compute_metrics(g, g.order() <= 100000,
                           !o.no_spectral && g.order() <= 100000);
  if (o.format == "csv") {
    emit(o, metrics_csv({g.spec}, {m}, arith::parse_rational(o.alpha)));
    return 0;
  }
  json rep;
  rep["config"] = config_json(o, "metrics");
  rep["spec"] = g.spec.to_string();
  rep["metrics"] = metrics_json(m);
  emit(o, rep.dump());
  return 0;
}

int cmd_boxspace(const Options& o, bool dalpha_only) {
  Filtration f = schedule_from(o.schedule);
  auto specs = components(f, o.kmax, o.max_vertices);
  auto ms = schedule_metrics(o, specs);
  Rat alpha = arith::parse_rational(o.alpha);
  Rat K;
  if (o.K.empty()) {
    double r = measured_min_ratio(ms, alpha);
    K = Rat(static_cast<long>(r * 1024.0), 1024);
    K.canonicalize();
  } else {
    K = arith::parse_rational(o.K);
  }
  auto res = dalpha_check(ms, {alpha, K});

  json rep;
  rep["config"] = config_json(o, dalpha_only ? "dalpha" : "boxspace");
  rep["schedule"] = f.to_string();
  rep["alpha"] = alpha.get_str();
  rep["K"] = K.get_str();
  rep["dalpha"] = {{"verdict", res.verdict},
                   {"per_component", res.per_component}};
  if (!dalpha_only) {
    json comps = json::array();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      json c = metrics_json(ms[i]);
      c["spec"] = specs[i].to_string();
      comps.push_back(c);
    }
    rep["components"] = comps;
    auto er = expansion_report(ms);
    rep["expansion"] = {{"min_cheeger_lower", er.min_cheeger_lower},
                        {"expansion_fails", er.expansion_fails},
                        {"non_conclusive", er.non_conclusive},
                        {"verdict", er.verdict}};
    if (er.decay_exponent) rep["expansion"]["decay_exponent"] = *er.decay_exponent;
  }
  if (o.format == "csv")
    emit(o, metrics_csv(specs, ms, alpha));
  else
    emit(o, rep.dump());
  if (o.format == "csv") std::cerr << rep["dalpha"].dump() << "\n";
  return 0;
}

int cmd_distinguish(const Options& o) {
  Rat R = arith::parse_rational(o.ratio);
  MatchingVerdict v;
  if (o.nks.size() == 2 && o.sl.empty()) {
    v = distinguish_nks(arith::parse_rational(o.nks[0]),
                        arith::parse_rational(o.nks[1]), o.disp, R, o.horizon);
  } else if (o.sl.size() == 2 && o.nks.empty()) {
    auto parse = [](const std::string& s) {
      auto comma = s.find(',');
      if (comma == std::string::npos)
        throw InvalidInputError("--sl expects m,p");
      return std::pair<int, std::uint64_t>(
          std::stoi(s.substr(0, comma)), std::stoull(s.substr(comma + 1)));
    };
    auto [m, pp] = parse(o.sl[0]);
    auto [n, q] = parse(o.sl[1]);
    v = distinguish_sl_volumes(m, pp, n, q, o.disp, R, o.horizon);
  } else {
    throw InvalidInputError(
        "distinguish needs exactly two --nks rates or two --sl pairs");
  }
  json rep;
  rep["config"] = config_json(o, "distinguish");
  rep["verdict"] = verdict_json(v);
  emit(o, rep.dump());
  return 0;
}

int cmd_count(const Options& o) {
  json rep;
  rep["config"] = config_json(o, "count");
  int rc = 0;
  std::string csv;
  if (o.group == "z2d4") {
    auto closed = census_z2d4_closedform(o.max);
    csv = closed.to_csv();
    rep["closedform"] = {{"s_max", closed.s[o.max]}};
    if (o.oracle) {
      auto oracle = census_z2d4_oracle(o.max);
      csv += oracle.to_csv();
      std::int64_t mismatch = 0;
      for (std::int64_t n = 1; n <= o.max && !mismatch; ++n)
        if (closed.a[n] != oracle.a[n]) mismatch = n;
      rep["oracle"] = {{"s_max", oracle.s[o.max]}};
      rep["closedform_eq_oracle"] = mismatch == 0;
      if (mismatch) {
        rep["finding"] =
            "closed form disagrees with the normal-closure oracle, first at "
            "index " + std::to_string(mismatch);
        rc = 3;
      }
    }
  } else if (o.group == "zxz2") {
    auto z = census_z_cross_z2(o.max);
    csv = z.census.to_csv();
    rep["K"] = z.K;
  } else if (o.group == "lattice") {
    auto lats = enumerate_sublattices(o.max);
    std::vector<std::uint64_t> per_index(o.max + 1, 0);
    for (const auto& L : lats) ++per_index[L.index()];
    bool sigma_ok = true;
    for (std::int64_t n = 1; n <= o.max; ++n)
      sigma_ok &= Int(per_index[n]) == arith::sigma_divisors(n);
    rep["per_index"] = per_index;
    rep["sigma_ok"] = sigma_ok;
    if (!sigma_ok) rc = 3;
  } else {
    throw InvalidInputError("--group must be z2d4, zxz2 or lattice");
  }
  if (o.format == "csv" && !csv.empty())
    emit(o, csv);
  else
    emit(o, rep.dump());
  return rc;
}

int cmd_isometry(const Options& o) {
  auto b = o.control ? LampBijection::moved_identity()
                     : LampBijection::standard();
  auto r = verify_isomorphism(b, static_cast<int>(o.n));
  json rep;
  rep["config"] = config_json(o, "isometry");
  rep["n"] = o.n;
  rep["ok"] = r.ok;
  rep["elements"] = r.elements;
  rep["edges_checked"] = r.edges_checked;
  if (!r.ok) {
    rep["failure"] = r.failure;
    rep["witness_source"] = *r.witness_source;
    rep["witness_image"] = *r.witness_image;
  }
  emit(o, rep.dump());
  return r.ok ? 0 : 3;
}

int cmd_fullbox(const Options& o) {
  auto ret = fullbox_cycle_retraction(o.max);
  auto z = census_z_cross_z2(o.max);
  bool kn_ok = true;
  for (std::int64_t n = 1; n < static_cast<std::int64_t>(z.K.size()); ++n)
    kn_ok &= z.K[n] == 3;
  json rep;
  rep["config"] = config_json(o, "fullbox");
  rep["K_n_all_3"] = kn_ok;
  rep["retraction"] = json::parse(ret.to_json());
  emit(o, rep.dump());
  return kn_ok ? 0 : 3;
}

int cmd_verify_all(const Options& o) {
  auto r = run_verify_all(o.max_vertices);
  // The first line is the comparable payload; the timing line is excluded
  // from any comparison.
  std::cout << r.payload << "\n";
  std::cout << "timing " << r.timing << "\n";
  for (const auto& f : r.findings) std::cerr << "finding: " << f << "\n";
  return r.all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boxlab: box spaces of finite quotients, desk-scale checks"};
  app.require_subcommand(1);
  Options o;
  try {
    o.max_vertices = default_budget();
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto add_common = [&](CLI::App* c) {
    c->add_option("--max-vertices", o.max_vertices, "vertex budget");
    c->add_option("--format", o.format, "json or csv");
    c->add_option("-o,--out", o.out, "output path (default stdout)");
  };
  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family,
                  "cyclic|sol|sl|wreath|lamplighter|heisenberg|zxz2")
        ->required();
    c->add_option("--n", o.n, "cyclic/wreath/zxz2 size");
    c->add_option("--modulus", o.modulus, "sol/sl/heisenberg modulus");
    c->add_option("--m", o.m, "SL dimension");
    c->add_option("--k", o.k, "lamplighter congruence level");
    c->add_option("--eps", o.eps, "zxz2 quotient type (0, 1 or 2)");
    c->add_option("--lamp", o.lamp, "wreath lamp group: z2|z4|z2xz2");
  };

  auto* quotient = app.add_subcommand("quotient", "build a Cayley graph");
  add_family(quotient);
  add_common(quotient);

  auto* metrics = app.add_subcommand("metrics", "metrics of one quotient");
  add_family(metrics);
  add_common(metrics);
  metrics->add_option("--alpha", o.alpha, "exponent for the CSV ratio column");
  metrics->add_flag("--no-spectral", o.no_spectral);

  auto add_schedule = [&](CLI::App* c) {
    c->add_option("--schedule", o.schedule,
                  "z:s | sol:b | lamplighter | sl:m,p | zxz2")
        ->required();
    c->add_option("--kmax", o.kmax, "number of components")->required();
    c->add_option("--alpha", o.alpha, "rational exponent a/b");
    c->add_option("--K", o.K, "rational constant (default: measured)");
    c->add_flag("--no-spectral", o.no_spectral);
    add_common(c);
  };
  auto* boxspace = app.add_subcommand("boxspace", "box-space metrics + verdicts");
  add_schedule(boxspace);
  auto* dalpha = app.add_subcommand("dalpha", "D_alpha verdict only");
  add_schedule(dalpha);

  auto* distinguish =
      app.add_subcommand("distinguish", "volume-matching distinguisher");
  distinguish->add_option("--nks", o.nks, "rate s (give twice)");
  distinguish->add_option("--sl", o.sl, "m,p pair (give twice)");
  distinguish->add_option("--disp", o.disp, "displacement bound D");
  distinguish->add_option("--ratio", o.ratio, "ratio bound R (rational)");
  distinguish->add_option("--horizon", o.horizon, "horizon H");
  add_common(distinguish);

  auto* count = app.add_subcommand("count", "normal-subgroup census");
  count->add_option("--group", o.group, "z2d4|zxz2|lattice")->required();
  count->add_option("--max", o.max, "max index");
  count->add_flag("--oracle", o.oracle, "compare against the brute-force oracle");
  add_common(count);

  auto* isometry = app.add_subcommand("isometry", "wreath lamp-swap isometry");
  isometry->add_option("--n", o.n, "cycle length (1..8)")->required();
  isometry->add_flag("--control", o.control, "use the negative-control bijection");
  add_common(isometry);

  auto* fullbox = app.add_subcommand("fullbox", "full-box cycle retraction");
  fullbox->add_option("--group", o.group, "zxz2");
  fullbox->add_option("--max", o.max, "max quotient order");
  add_common(fullbox);

  auto* verify = app.add_subcommand("verify-all", "run every desk-scale check");
  verify->add_option("--max-vertices", o.max_vertices, "vertex budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(quotient)) return cmd_quotient(o);
    if (app.got_subcommand(metrics)) return cmd_metrics(o);
    if (app.got_subcommand(boxspace)) return cmd_boxspace(o, false);
    if (app.got_subcommand(dalpha)) return cmd_boxspace(o, true);
    if (app.got_subcommand(distinguish)) return cmd_distinguish(o);
    if (app.got_subcommand(count)) return cmd_count(o);
    if (app.got_subcommand(isometry)) return cmd_isometry(o);
    if (app.got_subcommand(fullbox)) return cmd_fullbox(o);
    if (app.got_subcommand(verify)) return cmd_verify_all(o);
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
