#include "monocorr/cli/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "monocorr/audit/bound_audit.hpp"
#include "monocorr/error.hpp"
#include "monocorr/gauss/grid.hpp"
#include "monocorr/gauss/halfspace.hpp"
#include "monocorr/gauss/normal.hpp"
#include "monocorr/io/report_io.hpp"
#include "monocorr/mc/oracle.hpp"
#include "monocorr/random.hpp"

namespace monocorr::cli {

namespace {

const std::set<std::string> kCommands = {"cube-audit", "gauss-grid", "gamma-min", "theorem3-audit", "mc-calibrate"};

struct Options {
  std::string families;
  std::string out;
  std::string t_range, s_range, rho_range;
  std::string pins_path;
  bool pin_mode = false;
  gauss::QuadratureConfig quad;
  mc::McConfig mc{1'000'000, 0, 64};
  std::uint64_t seed = 14;
  int instances = 20;
  int cap = cube::kDefaultDimensionCap;
};

void apply_thread_cap() {
  const char* env = std::getenv("MONOCORR_THREADS");
  if (!env) return;
  int n = 0;
  const char* end = env + std::char_traits<char>::length(env);
  if (std::from_chars(env, end, n).ptr == end && n > 0) omp_set_num_threads(n);
}

/// Splices the flags of a --config JSON object in front of the explicit
/// ones, so flags given on the command line take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw ParseError("--config needs a path");
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config.empty()) return rest;

  const auto j = io::read_json(config);
  if (!j.is_object()) throw ParseError(config + ": config must be a JSON object");
  std::string command;
  std::vector<std::string> flags;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      if (!value.is_string()) throw ParseError(config + ": 'command' must be a string");
      command = value.get<std::string>();
    } else if (value.is_boolean()) {
      if (value.get<bool>()) flags.push_back("--" + key);
    } else if (value.is_string()) {
      flags.insert(flags.end(), {"--" + key, value.get<std::string>()});
    } else if (value.is_number()) {
      flags.insert(flags.end(), {"--" + key, value.dump()});
    } else {
      throw ParseError(config + ": unsupported value for '" + key + "'");
    }
  }

  std::vector<std::string> out;
  auto explicit_begin = rest.begin();
  if (!rest.empty() && kCommands.count(rest.front())) {
    out.push_back(rest.front());
    ++explicit_begin;
  } else if (!command.empty()) {
    out.push_back(command);
  }
  out.insert(out.end(), flags.begin(), flags.end());
  out.insert(out.end(), explicit_begin, rest.end());
  return out;
}

io::Pins resolve_pins(const Options& o) {
  if (o.pin_mode && o.pins_path.empty()) throw PreconditionError("--pin-mode needs --pins");
  return o.pins_path.empty() ? io::Pins{} : io::load_pins(o.pins_path);
}

void record_pin(io::Pins& pins, const std::string& key, double value) {
  if (!pins.count(key)) pins[key] = value;
}

int report_violations(const std::vector<std::string>& violations, std::ostream& err) {
  for (const auto& v : violations) err << "violation: " << v << '\n';
  return violations.empty() ? kOk : kViolation;
}

int finish_reports(const Options& o, const std::vector<audit::AuditReport>& reports,
                   const std::vector<std::string>& violations, std::ostream& err) {
  io::Pins pins = resolve_pins(o);
  if (o.pin_mode) {
    std::map<std::string, double> minima;
    for (const auto& r : reports) {
      if (!r.ratio.is_finite()) continue;
      auto [it, fresh] = minima.emplace(r.inequality, r.ratio.value);
      if (!fresh) it->second = std::min(it->second, r.ratio.value);
    }
    for (const auto& [k, v] : minima) record_pin(pins, k, v);
    io::save_pins(o.pins_path, pins);
  }
  const bool pinned = !o.pins_path.empty();
  const bool ok = io::write_reports(o.out, reports, pinned ? &pins : nullptr);
  const int rc = report_violations(violations, err);
  if (!ok) err << "violation: ratio below pinned minimum\n";
  return ok ? rc : kViolation;
}

int run_cube(const Options& o, std::ostream& err) {
  const auto catalog = io::load_catalog(o.families, o.cap);
  const auto campaign = run_cube_audit(catalog, o.cap);
  return finish_reports(o, campaign.reports, campaign.violations, err);
}

int run_grid(const Options& o, std::ostream& err) {
  const auto rows = gauss::grid_scan(gauss::GridRange::parse(o.t_range), gauss::GridRange::parse(o.s_range),
                                     gauss::GridRange::parse(o.rho_range), o.quad);
  io::Pins pins = resolve_pins(o);
  if (o.pin_mode) {
    double lo = rows.front().gamma;
    for (const auto& r : rows) lo = std::min(lo, r.gamma);
    record_pin(pins, "gamma_grid_min", lo);
    io::save_pins(o.pins_path, pins);
  }
  const bool pinned = !o.pins_path.empty();
  io::write_text(o.out, io::grid_csv(rows, pinned ? &pins : nullptr));

  std::vector<std::string> violations;
  bool below_pin = false;
  for (const auto& r : rows) {
    if (r.at.rho > 0.0 && !(r.cov > 0.0 && r.gamma > 0.0)) {
      violations.push_back("non-positive covariance at t=" + io::format_real(r.at.t) +
                           " s=" + io::format_real(r.at.s) + " rho=" + io::format_real(r.at.rho));
    }
    if (pinned && pins.count("gamma_grid_min") && r.gamma < pins.at("gamma_grid_min")) below_pin = true;
  }
  if (below_pin) violations.push_back("gamma below pinned minimum");
  return report_violations(violations, err);
}

int run_gamma_min(const Options& o, std::ostream& err) {
  const auto m = gauss::gamma_grid_min(gauss::GridRange::parse(o.t_range), gauss::GridRange::parse(o.s_range),
                                       gauss::GridRange::parse(o.rho_range), o.quad);
  io::Pins pins = resolve_pins(o);
  if (o.pin_mode) {
    record_pin(pins, "gamma_grid_min", m.min);
    io::save_pins(o.pins_path, pins);
  }
  io::json j{{"min", m.min}, {"argmin", {{"t", m.argmin.t}, {"s", m.argmin.s}, {"rho", m.argmin.rho}}}};
  std::vector<std::string> violations;
  if (!(m.min > 0.0)) violations.push_back("gamma minimum is not positive");
  if (auto it = pins.find("gamma_grid_min"); !o.pins_path.empty() && it != pins.end()) {
    j["pinned"] = it->second;
    j["pass"] = m.min >= it->second;
    if (m.min < it->second) violations.push_back("gamma minimum below pinned value");
  }
  io::write_text(o.out, j.dump(2) + "\n");
  return report_violations(violations, err);
}

int run_theorem3(const Options& o, std::ostream& err) {
  const auto instances =
      o.families.empty() ? random_step_instances(o.seed, o.instances) : io::load_step_instances(o.families);
  if (instances.empty()) throw PreconditionError("no instances to audit");
  std::vector<audit::AuditReport> reports;
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    auto r = stieltjes::theorem3_report(inst.f, inst.g, inst.w, inst.v, o.quad, inst.label);
    mc::McConfig mcfg = o.mc;
    mcfg.seed = o.mc.seed + i;
    const auto est = mc::mc_general_cov(inst.f, inst.g, r.extra.at("rho"), mcfg);
    r.extra["mc_mean"] = est.mean;
    r.extra["mc_std_error"] = est.std_error;
    if (!est.covers(r.cov_value())) violations.push_back(inst.label + ": Monte Carlo disagrees with quadrature");
    if (r.cov_value() < 0.0) violations.push_back(inst.label + ": negative covariance");
    reports.push_back(std::move(r));
  }
  return finish_reports(o, reports, violations, err);
}

int run_calibrate(const Options& o, std::ostream& err) {
  const auto cases = mc::calibration_suite(o.mc);
  io::json rows = io::json::array();
  int covered = 0;
  for (const auto& c : cases) {
    covered += c.covered ? 1 : 0;
    rows.push_back({{"label", c.label}, {"expected", c.expected}, {"estimate", mc::to_json(c.estimate)},
                    {"covered", c.covered}});
  }
  const int total = static_cast<int>(cases.size());
  const bool pass = covered >= total - 2;
  io::write_text(o.out, io::json{{"cases", rows}, {"covered", covered}, {"total", total}, {"pass", pass}}.dump(2) +
                            "\n");
  if (!pass) err << "violation: only " << covered << " of " << total << " intervals cover their target\n";
  return pass ? kOk : kViolation;
}

void add_quadrature(CLI::App* sub, Options& o) {
  sub->add_option("--abs-tol", o.quad.abs_tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--rel-tol", o.quad.rel_tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-subdiv", o.quad.max_subdivisions, "Quadrature subdivision limit")->check(CLI::PositiveNumber);
}

void add_mc(CLI::App* sub, Options& o) {
  sub->add_option("--mc-seed", o.mc.seed, "Monte Carlo seed");
  sub->add_option("--mc-samples", o.mc.samples, "Monte Carlo sample count")->check(CLI::Range(std::int64_t{100}, std::int64_t{1} << 40));
  sub->add_option("--mc-streams", o.mc.streams, "Independent generator streams")->check(CLI::PositiveNumber);
}

void add_pins(CLI::App* sub, Options& o) {
  sub->add_option("--pins", o.pins_path, "Regression pins (JSON)");
  sub->add_flag("--pin-mode", o.pin_mode, "Record missing pins from this run");
}

void add_grid(CLI::App* sub, Options& o) {
  sub->add_option("--t-range", o.t_range, "lo:hi:count")->required();
  sub->add_option("--s-range", o.s_range, "lo:hi:count")->required();
  sub->add_option("--rho-range", o.rho_range, "lo:hi:count")->required();
}

}  // namespace

CubeCampaign run_cube_audit(const std::vector<cube::FamilyDescriptor>& catalog, int cap) {
  if (catalog.empty()) throw PreconditionError("catalog is empty");
  std::vector<cube::BooleanFamily> families;
  std::vector<cube::FamilyProfile> profiles;
  std::vector<std::string> labels;
  for (const auto& d : catalog) {
    families.push_back(cube::generate(d, cap));
    profiles.push_back(cube::classify(families.back()));
    labels.push_back(cube::label(d));
  }

  CubeCampaign c;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& f = families[i];
    const auto& p = profiles[i];
    const int n = f.n();
    if (!p.increasing) {
      c.violations.push_back(labels[i] + ": not increasing");
      continue;
    }
    if (cube::first_level_coefficients(f) != cube::influence_profile(f).per_coordinate) {
      c.violations.push_back(labels[i] + ": first-level coefficients differ from influences");
    }
    for (std::size_t j = 0; j < families.size(); ++j) {
      if (j == i || families[j].n() != n) continue;
      if (p.balanced && !audit::proof1_identity_check(f, families[j]).is_zero()) {
        c.violations.push_back(labels[i] + " vs " + labels[j] + ": agreement identity residual is non-zero");
      }
      if (j < i || !profiles[j].increasing) continue;
      const std::string pair = labels[i] + "|" + labels[j];
      auto tal = audit::talagrand_report(f, families[j], pair);
      if (std::get<Rational>(tal.cov) < Rational(0)) c.violations.push_back(pair + ": negative covariance");
      c.reports.push_back(std::move(tal));
      c.reports.push_back(audit::kkm_report(f, families[j], pair));
    }
    if (p.balanced && p.regular && n % 2 == 1) {
      auto t1 = audit::theorem1_report(f, labels[i]);
      auto t2 = audit::theorem2_report(f, labels[i]);
      if (!(t1.cov_value() > 0.0)) c.violations.push_back(labels[i] + ": no positive correlation with majority");
      if (!(t2.cov_value() > 0.0)) c.violations.push_back(labels[i] + ": no positively correlated dictator or majority");
      c.reports.push_back(std::move(t1));
      c.reports.push_back(std::move(t2));
    }
    if (p.balanced && n >= 2) {
      const auto inf = cube::influence_profile(f).per_coordinate;
      audit::AuditReport r;
      r.label = labels[i];
      r.n = n;
      r.inequality = "kkl";
      r.cov = *std::max_element(inf.begin(), inf.end());
      r.rhs_core = std::log(static_cast<double>(n)) / n;
      r.ratio = audit::Ratio::of(r.cov_value(), r.rhs_core);
      c.reports.push_back(std::move(r));
    }
  }
  return c;
}

stieltjes::MonotoneStep random_step(std::mt19937_64& eng) {
  const auto atoms = static_cast<std::size_t>(uniform_int(eng, 1, 8));
  std::vector<std::pair<double, double>> points;
  while (points.size() < atoms) {
    const double t = uniform_between(eng, -4.0, 4.0);
    if (std::none_of(points.begin(), points.end(), [t](const auto& q) { return q.first == t; })) {
      points.push_back({t, 0.0});
    }
  }
  std::sort(points.begin(), points.end());
  const double mass = 0.05 + 0.95 * uniform_open_closed(eng);
  double raw_total = 0.0;
  for (auto& q : points) raw_total += q.second = uniform_open_closed(eng);
  for (auto& q : points) q.second *= mass / raw_total;
  const double base = uniform_between(eng, 0.0, 1.0 - mass);
  return stieltjes::make_step(base, points);
}

io::StepInstance random_step_instance(std::mt19937_64& eng, std::string label) {
  io::StepInstance inst;
  inst.label = std::move(label);
  inst.f = random_step(eng);
  inst.g = random_step(eng);
  const auto dim = static_cast<std::size_t>(uniform_int(eng, 2, 8));
  auto direction = [&] {
    std::vector<double> x(dim);
    double norm2 = 0.0;
    for (double& e : x) {
      e = gauss::quantile(uniform_open(eng));
      norm2 += e * e;
    }
    const double norm = std::sqrt(norm2);
    for (double& e : x) e /= norm;
    return x;
  };
  inst.w = direction();
  inst.v = direction();
  if (gauss::correlation(inst.w, inst.v) < 0.0) {
    for (double& e : inst.v) e = -e;
  }
  return inst;
}

std::vector<io::StepInstance> random_step_instances(std::uint64_t seed, int count) {
  auto eng = make_engine(seed);
  std::vector<io::StepInstance> out;
  for (int i = 0; i < count; ++i) {
    char label[32];
    std::snprintf(label, sizeof label, "theorem3#%02d", i);
    out.push_back(random_step_instance(eng, label));
  }
  return out;
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_cap();
  std::vector<std::string> argv;
  try {
    argv = expand_config(args);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Options o;
  CLI::App app{"Audit campaigns for monotone correlation inequalities", "monocorr-audit"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::function<int(const Options&, std::ostream&)> action;

  auto* cube_cmd = app.add_subcommand("cube-audit", "Exact audits over a catalog of increasing families");
  cube_cmd->add_option("--families", o.families, "Catalog JSON")->required();
  cube_cmd->add_option("--max-dim", o.cap, "Dimension cap")->check(CLI::Range(1, cube::kMaxDimension));
  cube_cmd->callback([&] { action = run_cube; });

  auto* grid_cmd = app.add_subcommand("gauss-grid", "Orthant covariance, bound core and gamma over a grid");
  add_grid(grid_cmd, o);
  grid_cmd->callback([&] { action = run_grid; });

  auto* gmin_cmd = app.add_subcommand("gamma-min", "Minimum of gamma over a grid");
  add_grid(gmin_cmd, o);
  gmin_cmd->callback([&] { action = run_gamma_min; });

  auto* t3_cmd = app.add_subcommand("theorem3-audit", "Step-function audits with Monte Carlo cross-checks");
  t3_cmd->add_option("--families", o.families, "Instance JSON (random instances when omitted)");
  t3_cmd->add_option("--seed", o.seed, "Seed for random instances");
  t3_cmd->add_option("--instances", o.instances, "Number of random instances")->check(CLI::PositiveNumber);
  add_mc(t3_cmd, o);
  t3_cmd->callback([&] { action = run_theorem3; });

  auto* cal_cmd = app.add_subcommand("mc-calibrate", "Coverage of Monte Carlo intervals on closed forms");
  add_mc(cal_cmd, o);
  cal_cmd->callback([&] { action = run_calibrate; });

  for (auto* sub : {cube_cmd, grid_cmd, gmin_cmd, t3_cmd, cal_cmd}) {
    sub->add_option("--out", o.out, "Report path")->required();
    add_quadrature(sub, o);
    if (sub != cal_cmd) add_pins(sub, o);
  }

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    o.quad.validate();
    o.mc.validate();
    return action(o, err);
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace monocorr::cli
