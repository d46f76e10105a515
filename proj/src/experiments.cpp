#include "rieszlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "rieszlab/diagnostics.hpp"
#include "rieszlab/energy.hpp"
#include "rieszlab/equilibrium.hpp"
#include "rieszlab/greedy.hpp"
#include "rieszlab/io.hpp"
#include "rieszlab/minimize.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/rng.hpp"

namespace rieszlab {

const VerdictWindows& verdict_windows() {
  static const VerdictWindows w;
  return w;
}

std::string mode_name(ExperimentMode m) {
  switch (m) {
    case ExperimentMode::Greedy:
      return "greedy";
    case ExperimentMode::Minimize:
      return "minimize";
    case ExperimentMode::Equilibrium:
      return "equilibrium";
    case ExperimentMode::ScalingSuite:
      return "scaling-suite";
  }
  return "?";
}

ExperimentMode mode_from_name(const std::string& name) {
  if (name == "greedy") return ExperimentMode::Greedy;
  if (name == "minimize") return ExperimentMode::Minimize;
  if (name == "equilibrium") return ExperimentMode::Equilibrium;
  if (name == "scaling-suite" || name == "suite") return ExperimentMode::ScalingSuite;
  throw std::invalid_argument("unknown experiment mode: " + name);
}

namespace {

constexpr double kUnbounded = 1e18;
constexpr double kGolden = 2.39996322972865332;  // golden angle, probe placement

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Verdict window_verdict(const std::string& name, double value, double lo, double hi) {
  return Verdict{name, value >= lo && value <= hi, value, lo, hi};
}

Verdict upper_verdict(const std::string& name, double value, double hi) {
  return Verdict{name, value <= hi, value, -kUnbounded, hi};
}

CompactSetSpec set_from_json(const nlohmann::json& j) {
  if (j.is_string()) return CompactSetSpec::from_name(j.get<std::string>());
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "interval")
    return CompactSetSpec::interval(j.value("a", -1.0), j.value("b", 1.0));
  if (kind == "circle") return CompactSetSpec::circle();
  if (kind == "sphere") {
    const int dim = j.value("dim", 2);
    if (dim == 1) return CompactSetSpec::circle();
    if (dim == 2) return CompactSetSpec::sphere2();
    throw std::invalid_argument("sphere supports dim 1 or 2");
  }
  if (kind == "sphere2") return CompactSetSpec::sphere2();
  if (kind == "disk") return CompactSetSpec::disk();
  if (kind == "ball") {
    const int dim = j.value("dim", 3);
    if (dim == 2) return CompactSetSpec::disk();
    if (dim == 3) return CompactSetSpec::ball3();
    throw std::invalid_argument("ball supports dim 2 or 3");
  }
  if (kind == "ball3") return CompactSetSpec::ball3();
  if (kind == "torus")
    return CompactSetSpec::torus(j.value("major", 2.0), j.value("minor", 1.0));
  throw std::invalid_argument("unknown set kind: " + kind);
}

nlohmann::ordered_json set_to_json(const CompactSetSpec& s) {
  nlohmann::ordered_json j;
  switch (s.kind) {
    case SetKind::Interval:
      j["kind"] = "interval";
      j["a"] = s.a;
      j["b"] = s.b;
      break;
    case SetKind::Circle:
      j["kind"] = "circle";
      break;
    case SetKind::Sphere:
      j["kind"] = "sphere2";
      break;
    case SetKind::Disk:
      j["kind"] = "disk";
      break;
    case SetKind::Ball:
      j["kind"] = "ball3";
      break;
    case SetKind::Torus:
      j["kind"] = "torus";
      j["major"] = s.major;
      j["minor"] = s.minor;
      break;
  }
  return j;
}

KernelSpec kernel_from_json(const nlohmann::json& j) {
  if (j.is_string()) return KernelSpec::from_name(j.get<std::string>());
  if (j.value("log", false)) return KernelSpec::log();
  return KernelSpec::riesz(j.at("s").get<double>());
}

nlohmann::ordered_json kernel_to_json(const KernelSpec& k) {
  nlohmann::ordered_json j;
  if (k.is_log()) {
    j["log"] = true;
  } else {
    j["s"] = k.s;
  }
  return j;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_schedule.empty()) throw std::invalid_argument("empty N schedule");
  for (std::size_t i = 0; i < n_schedule.size(); ++i) {
    if (n_schedule[i] < 1) throw std::invalid_argument("N values must be positive");
    if (i > 0 && n_schedule[i] <= n_schedule[i - 1])
      throw std::invalid_argument("N schedule must be strictly increasing");
  }
  if (candidate_budget < 256) throw std::invalid_argument("candidate budget must be >= 256");
  if (probe_budget < 1000) throw std::invalid_argument("probe budget must be >= 1000");
  if (mc_samples < 1000) throw std::invalid_argument("mc_samples must be >= 1000");
  if (mode == ExperimentMode::Equilibrium)
    EquilibriumMeasure::for_set(set, kernel);  // throws when unsupported
  if (core_radius < 0.0) throw std::invalid_argument("core_radius must be >= 0");
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["set"] = set_to_json(set);
  j["kernel"] = kernel_to_json(kernel);
  j["mode"] = ::rieszlab::mode_name(mode);
  j["n_schedule"] = n_schedule;
  j["seed"] = seed;
  j["candidate_budget"] = candidate_budget;
  j["refine_steps"] = refine_steps;
  j["probe_budget"] = probe_budget;
  j["restarts"] = restarts;
  j["max_iters"] = max_iters;
  j["mc_samples"] = mc_samples;
  j["core_radius"] = core_radius;
  j["compute_eta"] = compute_eta;
  j["write_points"] = write_points;
  j["verdicts"] = {{"delta_slope", verdict_delta_slope},
                   {"eta_slope", verdict_eta_slope},
                   {"greedy_floor", verdict_greedy_floor}};
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.name = j.value("name", std::string("experiment"));
  c.set = set_from_json(j.at("set"));
  c.kernel = kernel_from_json(j.at("kernel"));
  c.mode = ::rieszlab::mode_from_name(j.value("mode", std::string("minimize")));
  if (j.contains("n_schedule")) {
    c.n_schedule = j.at("n_schedule").get<std::vector<int>>();
  } else if (j.contains("n")) {
    c.n_schedule = {j.at("n").get<int>()};
  }
  c.seed = j.value("seed", 1ull);
  c.candidate_budget = j.value("candidate_budget", 4096);
  c.refine_steps = j.value("refine_steps", 50);
  c.probe_budget = j.value("probe_budget", std::size_t{20000});
  c.restarts = j.value("restarts", 0);
  c.max_iters = j.value("max_iters", 0);
  c.mc_samples = j.value("mc_samples", std::size_t{200000});
  c.core_radius = j.value("core_radius", 0.0);
  c.compute_eta = j.value("compute_eta", false);
  c.write_points = j.value("write_points", true);
  if (j.contains("verdicts")) {
    const auto& v = j.at("verdicts");
    c.verdict_delta_slope = v.value("delta_slope", false);
    c.verdict_eta_slope = v.value("eta_slope", false);
    c.verdict_greedy_floor = v.value("greedy_floor", false);
  }
  return c;
}

namespace {

void write_report_files(const ExperimentConfig& cfg, const ScalingReport& rep,
                        const std::vector<Configuration>& configs) {
  if (cfg.out_dir.empty()) return;
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const fs::path dir(cfg.out_dir);
  {
    std::ofstream out(dir / (cfg.name + "_report.json"));
    out << rep.to_json().dump(2) << "\n";
  }
  {
    std::ofstream out(dir / (cfg.name + "_rows.csv"));
    out << rep.rows_csv();
  }
  if (cfg.write_points) {
    for (const Configuration& c : configs) {
      save_points(c, (dir / (cfg.name + "_n" + std::to_string(c.points.size()) + ".csv")).string(),
                  cfg.kernel);
    }
  }
}

void add_slope_fit_and_verdicts(const ExperimentConfig& cfg, ScalingReport& rep) {
  const VerdictWindows& w = verdict_windows();
  const double d = static_cast<double>(cfg.set.intrinsic_dim);
  const double center = -1.0 / d;

  std::vector<std::pair<double, double>> delta_pairs, eta_pairs;
  for (const ReportRow& r : rep.rows) {
    if (r.delta > 0.0) delta_pairs.emplace_back(r.n, r.delta);
    if (r.eta > 0.0) eta_pairs.emplace_back(r.n, r.eta);
  }
  if (delta_pairs.size() >= 4) {
    const ExponentFit f = fit_exponent(delta_pairs);
    rep.fits.push_back({"delta", f.slope, f.stderr_slope, f.residual_rms,
                        rep.rows.front().n, rep.rows.back().n});
    if (cfg.verdict_delta_slope)
      rep.verdicts.push_back(window_verdict("delta-slope", f.slope,
                                            center - w.slope_halfwidth,
                                            center + w.slope_halfwidth));
  }
  if (eta_pairs.size() >= 4) {
    const ExponentFit f = fit_exponent(eta_pairs);
    rep.fits.push_back({"eta", f.slope, f.stderr_slope, f.residual_rms, rep.rows.front().n,
                        rep.rows.back().n});
    if (cfg.verdict_eta_slope)
      rep.verdicts.push_back(window_verdict("eta-slope", f.slope, center - w.slope_halfwidth,
                                            center + w.slope_halfwidth));
  }
}

double row_delta(const ExperimentConfig& cfg, const Configuration& c) {
  if (c.points.size() < 2) return 0.0;
  if (cfg.core_radius > 0.0) {
    const double cr = cfg.core_radius;
    return separation_restricted(c, [cr](const Point& p) { return norm(p) <= cr; });
  }
  return separation(c);
}

ScalingReport run_point_modes(const ExperimentConfig& cfg) {
  ScalingReport rep;
  rep.meta["name"] = cfg.name;
  rep.meta["set"] = cfg.set.name();
  rep.meta["kernel"] = cfg.kernel.name();
  rep.meta["mode"] = mode_name(cfg.mode);
  rep.meta["seed"] = cfg.seed;
  if (cfg.core_radius > 0.0) rep.meta["core_radius"] = cfg.core_radius;

  std::vector<Configuration> configs;
  const VerdictWindows& w = verdict_windows();

  if (cfg.mode == ExperimentMode::Greedy) {
    GreedyPlan plan;
    plan.kernel = cfg.kernel;
    plan.set = cfg.set;
    plan.n_max = cfg.n_schedule.back();
    plan.seed = cfg.seed;
    plan.candidate_budget = cfg.candidate_budget;
    plan.refine_steps = cfg.refine_steps;

    const auto t0 = Clock::now();
    const Configuration full = greedy_sequence(plan);
    rep.meta["generation_ms"] = elapsed_ms_or_zero(ms_since(t0));

    for (const int n : cfg.n_schedule) {
      const auto tr = Clock::now();
      Configuration pre = full.prefix(static_cast<std::size_t>(n));
      ReportRow row;
      row.n = n;
      row.delta = row_delta(cfg, pre);
      if (cfg.compute_eta && n >= 2) {
        const CoveringResult cov =
            covering_radius(pre, cfg.probe_budget, Rng::mix(cfg.seed, 0xe7a0ull + n));
        row.eta_raw = cov.raw;
        row.eta = cov.refined;
      }
      row.energy = n >= 2 ? energy_of_points(cfg.kernel, pre.points) : 0.0;
      row.wall_ms = elapsed_ms_or_zero(ms_since(tr));
      rep.rows.push_back(row);
      configs.push_back(std::move(pre));
    }

    const int j_min = static_cast<int>(w.greedy_floor_jmin);
    if (full.points.size() >= static_cast<std::size_t>(j_min)) {
      const GreedyFloor floor = greedy_separation_floor(full, cfg.set.intrinsic_dim, j_min);
      rep.meta["greedy_floor_min_m"] = floor.min_m;
      rep.meta["greedy_floor_median_m"] = floor.median_m;
      std::vector<std::pair<double, double>> md_pairs;
      for (std::size_t i = 0; i < floor.j_values.size(); ++i)
        md_pairs.emplace_back(floor.j_values[i], floor.min_dist_series[i]);
      if (md_pairs.size() >= 4) {
        const ExponentFit f = fit_exponent(md_pairs);
        rep.fits.push_back({"greedy-min-dist", f.slope, f.stderr_slope, f.residual_rms, j_min,
                            static_cast<int>(full.points.size())});
        if (cfg.verdict_greedy_floor) {
          rep.verdicts.push_back(window_verdict(
              "greedy-floor", floor.min_m / floor.median_m, w.greedy_floor_factor, kUnbounded));
          const double center = -1.0 / cfg.set.intrinsic_dim;
          rep.verdicts.push_back(window_verdict("greedy-min-dist-slope", f.slope,
                                                center - w.slope_halfwidth,
                                                center + w.slope_halfwidth));
        }
      }
    }
  } else {
    for (const int n : cfg.n_schedule) {
      const auto tr = Clock::now();
      MinimizePlan plan;
      plan.kernel = cfg.kernel;
      plan.set = cfg.set;
      plan.n = n;
      plan.restarts = cfg.restarts;
      plan.max_iters = cfg.max_iters;
      const MinimizeResult res = minimize_energy(plan, Rng::mix(cfg.seed, 0x3141ull + n));
      ReportRow row;
      row.n = n;
      row.delta = row_delta(cfg, res.config);
      if (cfg.compute_eta) {
        const CoveringResult cov =
            covering_radius(res.config, cfg.probe_budget, Rng::mix(cfg.seed, 0xe7a0ull + n));
        row.eta_raw = cov.raw;
        row.eta = cov.refined;
      }
      row.energy = res.energy;
      row.wall_ms = elapsed_ms_or_zero(ms_since(tr));
      rep.rows.push_back(row);
      configs.push_back(res.config);
    }
  }

  add_slope_fit_and_verdicts(cfg, rep);
  write_report_files(cfg, rep, configs);
  return rep;
}

/// Regularity and normalization checks of the closed-form measure.
void equilibrium_checks(const ExperimentConfig& cfg, ScalingReport& rep) {
  const VerdictWindows& w = verdict_windows();
  const EquilibriumMeasure em = EquilibriumMeasure::for_set(cfg.set, cfg.kernel);

  // r = 1 exercises the full radial quadrature on the ball forms; the uniform
  // forms need a radius that strictly covers the set.
  const double r_total = em.form == MeasureForm::BallClosedForm ? 1.0 : 1.5;
  const double total = measure_of_ball(em, Point(), r_total);
  rep.verdicts.push_back(window_verdict("normalization", total, 1.0 - w.normalization_tol,
                                        1.0 + w.normalization_tol));

  if (em.form != MeasureForm::BallClosedForm && em.form != MeasureForm::IntervalLogArcsine)
    return;

  const double ell = static_cast<double>(cfg.set.intrinsic_dim);
  const double s = cfg.kernel.s_or_zero();

  // Boundary point: mu(B(x, r)) scales like r^{(l+s)/2}.
  {
    Point x(1.0);
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 7; ++k) {
      const double r = 0.02 * std::pow(10.0, k / 6.0);  // 0.02 .. 0.2
      pairs.emplace_back(r, measure_of_ball(em, x, r));
    }
    const ExponentFit f = fit_exponent(pairs);
    rep.fits.push_back({"boundary-measure", f.slope, f.stderr_slope, f.residual_rms, 0, 0});
    const double expect = 0.5 * (ell + s);
    rep.verdicts.push_back(window_verdict("boundary-measure-slope", f.slope,
                                          expect - w.measure_slope_halfwidth,
                                          expect + w.measure_slope_halfwidth));
  }
  // Interior point: slope d over radii up to 0.2 * dist(x, boundary).
  {
    Point x(0.3);
    const double r_hi = 0.2 * (1.0 - 0.3);
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 6; ++k) {
      const double r = 0.02 * std::pow(r_hi / 0.02, k / 5.0);
      pairs.emplace_back(r, measure_of_ball(em, x, r));
    }
    const ExponentFit f = fit_exponent(pairs);
    rep.fits.push_back({"interior-measure", f.slope, f.stderr_slope, f.residual_rms, 0, 0});
    rep.verdicts.push_back(window_verdict("interior-measure-slope", f.slope,
                                          ell - w.measure_slope_halfwidth,
                                          ell + w.measure_slope_halfwidth));
  }
}

ScalingReport run_equilibrium_mode(const ExperimentConfig& cfg) {
  ScalingReport rep;
  rep.meta["name"] = cfg.name;
  rep.meta["set"] = cfg.set.name();
  rep.meta["kernel"] = cfg.kernel.name();
  rep.meta["mode"] = mode_name(cfg.mode);
  rep.meta["seed"] = cfg.seed;
  equilibrium_checks(cfg, rep);
  write_report_files(cfg, rep, {});
  return rep;
}

}  // namespace

ScalingReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode == ExperimentMode::Equilibrium) return run_equilibrium_mode(cfg);
  return run_point_modes(cfg);
}

// ---------------------------------------------------------------------------
// Canned experiments: one per acceptance check.
// ---------------------------------------------------------------------------

namespace {

ExperimentConfig scaling_cfg(const std::string& name, const CompactSetSpec& set,
                             const KernelSpec& k, const std::string& out_dir) {
  ExperimentConfig cfg;
  cfg.name = name;
  cfg.set = set;
  cfg.kernel = k;
  cfg.mode = ExperimentMode::ScalingSuite;
  cfg.n_schedule = {64, 128, 256, 512, 1024};
  cfg.seed = 2026;
  cfg.max_iters = 300;  // separation statistics plateau well before this
  cfg.verdict_delta_slope = true;
  cfg.out_dir = out_dir;
  return cfg;
}

ScalingReport canned_fekete(const std::string& out_dir) {
  const VerdictWindows& w = verdict_windows();
  ScalingReport rep;
  rep.meta["name"] = "fekete-interval";
  rep.meta["mode"] = "minimize";
  std::vector<Configuration> configs;
  for (const int n : {3, 4, 5}) {
    MinimizePlan plan;
    plan.kernel = KernelSpec::log();
    plan.set = CompactSetSpec::interval();
    plan.n = n;
    plan.restarts = 8;
    plan.max_iters = 3000;
    const MinimizeResult res = minimize_energy(plan, Rng::mix(2026, n));

    std::vector<double> nodes = legendre_derivative_roots(n - 1);
    nodes.insert(nodes.begin(), -1.0);
    nodes.push_back(1.0);
    std::vector<double> got;
    for (const Point& p : res.config.points) got.push_back(p[0]);
    std::sort(got.begin(), got.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      worst = std::max(worst, std::abs(nodes[i] - got[i]));

    rep.rows.push_back({n, separation(res.config), 0.0, 0.0, res.energy, 0.0});
    rep.verdicts.push_back(
        upper_verdict("fekete-n" + std::to_string(n), worst, w.fekete_coord_tol));
    configs.push_back(res.config);
  }
  ExperimentConfig files;
  files.name = "fekete-interval";
  files.kernel = KernelSpec::log();
  files.out_dir = out_dir;
  write_report_files(files, rep, configs);
  return rep;
}

ScalingReport canned_small_n(const std::string& out_dir) {
  const VerdictWindows& w = verdict_windows();
  ScalingReport rep;
  rep.meta["name"] = "small-n-exact";
  rep.meta["mode"] = "minimize";
  {
    MinimizePlan plan;
    plan.kernel = KernelSpec::riesz(1.0);
    plan.set = CompactSetSpec::sphere2();
    plan.n = 2;
    plan.restarts = 8;
    plan.max_iters = 3000;
    const MinimizeResult res = minimize_energy(plan, 7);
    rep.rows.push_back({2, separation(res.config), 0.0, 0.0, res.energy, 0.0});
    rep.verdicts.push_back(window_verdict("sphere-pair-energy", res.energy,
                                          1.0 - w.pair_energy_tol, 1.0 + w.pair_energy_tol));
  }
  {
    MinimizePlan plan;
    plan.kernel = KernelSpec::riesz(1.0);
    plan.set = CompactSetSpec::circle();
    plan.n = 3;
    plan.restarts = 8;
    plan.max_iters = 3000;
    const MinimizeResult res = minimize_energy(plan, 7);
    const double delta = separation(res.config);
    rep.rows.push_back({3, delta, 0.0, 0.0, res.energy, 0.0});
    rep.verdicts.push_back(window_verdict("circle-triangle-separation", delta,
                                          std::sqrt(3.0) - w.triangle_delta_tol,
                                          std::sqrt(3.0) + w.triangle_delta_tol));
  }
  ExperimentConfig files;
  files.name = "small-n-exact";
  files.out_dir = out_dir;
  write_report_files(files, rep, {});
  return rep;
}

ScalingReport canned_ball_equilibrium(const std::string& out_dir) {
  const VerdictWindows& w = verdict_windows();
  ExperimentConfig cfg;
  cfg.name = "ball-equilibrium";
  cfg.set = CompactSetSpec::disk();
  cfg.kernel = KernelSpec::riesz(1.0);
  cfg.mode = ExperimentMode::Equilibrium;
  cfg.out_dir = "";  // write after the extra verdict
  ScalingReport rep = run_experiment(cfg);

  const EquilibriumMeasure em = EquilibriumMeasure::for_set(cfg.set, cfg.kernel);
  const double mass = measure_of_ball(em, Point(), 0.6);
  rep.verdicts.push_back(
      window_verdict("central-ball-mass", mass, 0.2 - w.ball_mass_tol, 0.2 + w.ball_mass_tol));

  cfg.out_dir = out_dir;
  write_report_files(cfg, rep, {});
  return rep;
}

ScalingReport canned_empirical_regularity(const std::string& out_dir) {
  const VerdictWindows& w = verdict_windows();
  ScalingReport rep;
  rep.meta["name"] = "empirical-regularity";
  rep.meta["mode"] = "minimize";

  MinimizePlan plan;
  plan.kernel = KernelSpec::riesz(1.0);
  plan.set = CompactSetSpec::disk();
  plan.n = 2048;
  plan.restarts = 2;
  plan.max_iters = 400;
  const auto t0 = Clock::now();
  const MinimizeResult res = minimize_energy(plan, 2026);

  std::vector<double> radii;
  for (int k = 0; k < 7; ++k) radii.push_back(0.05 * std::pow(std::sqrt(2.0), k));

  const RegularityResult interior = empirical_regularity(res.config, Point(0.2, 0.1), radii);
  const RegularityResult boundary = empirical_regularity(res.config, Point(1.0, 0.0), radii);

  rep.rows.push_back({2048, separation(res.config), 0.0, 0.0, res.energy,
                      elapsed_ms_or_zero(ms_since(t0))});
  rep.verdicts.push_back(window_verdict("interior-empirical-slope", interior.slope,
                                        2.0 - w.empirical_slope_halfwidth,
                                        2.0 + w.empirical_slope_halfwidth));
  rep.verdicts.push_back(window_verdict("boundary-empirical-slope", boundary.slope,
                                        1.5 - w.empirical_slope_halfwidth,
                                        1.5 + w.empirical_slope_halfwidth));

  ExperimentConfig files;
  files.name = "empirical-regularity";
  files.kernel = plan.kernel;
  files.out_dir = out_dir;
  write_report_files(files, rep, {res.config});
  return rep;
}

ScalingReport canned_potential_flatness(const std::string& out_dir) {
  const VerdictWindows& w = verdict_windows();
  ScalingReport rep;
  rep.meta["name"] = "potential-flatness";
  rep.meta["mode"] = "equilibrium";

  const EquilibriumMeasure em =
      EquilibriumMeasure::for_set(CompactSetSpec::disk(), KernelSpec::riesz(1.0));

  std::vector<PotentialEstimate> interior;
  nlohmann::ordered_json probes = nlohmann::ordered_json::array();
  for (int i = 0; i < 10; ++i) {
    const double r = 0.08 * i;
    const Point y(r * std::cos(kGolden * i), r * std::sin(kGolden * i));
    interior.push_back(equilibrium_potential(em, y, 200000, Rng::mix(99, i)));
    probes.push_back({{"r", r}, {"value", interior.back().value}, {"se", interior.back().std_error}});
  }
  double lo = interior.front().value, hi = lo, max_se = 0.0, mean = 0.0;
  for (const PotentialEstimate& e : interior) {
    lo = std::min(lo, e.value);
    hi = std::max(hi, e.value);
    max_se = std::max(max_se, e.std_error);
    mean += e.value / interior.size();
  }
  rep.meta["interior_probes"] = probes;
  rep.meta["interior_mean"] = mean;
  rep.verdicts.push_back(upper_verdict("interior-flatness", (hi - lo) / max_se,
                                       w.potential_range_factor));

  double worst_margin = -kUnbounded;
  const double ext_radii[5] = {1.15, 1.3, 1.5, 1.8, 2.2};
  for (int i = 0; i < 5; ++i) {
    const Point y(ext_radii[i] * std::cos(kGolden * (10 + i)),
                  ext_radii[i] * std::sin(kGolden * (10 + i)));
    const PotentialEstimate e = equilibrium_potential(em, y, 200000, Rng::mix(99, 10 + i));
    worst_margin = std::max(worst_margin, (e.value - mean) / e.std_error);
  }
  rep.verdicts.push_back(
      upper_verdict("exterior-domination", worst_margin, w.exterior_margin_factor));

  ExperimentConfig files;
  files.name = "potential-flatness";
  files.out_dir = out_dir;
  write_report_files(files, rep, {});
  return rep;
}

ScalingReport canned_wiener(const std::string& out_dir) {
  const VerdictWindows& w = verdict_windows();
  ScalingReport rep;
  rep.meta["name"] = "wiener-constants";
  rep.meta["mode"] = "minimize";

  struct Case {
    const char* label;
    CompactSetSpec set;
    KernelSpec kernel;
    int n;
  };
  const Case cases[3] = {
      {"interval-log", CompactSetSpec::interval(), KernelSpec::log(), 512},
      {"circle-log", CompactSetSpec::circle(), KernelSpec::log(), 512},
      {"circle-s0.5", CompactSetSpec::circle(), KernelSpec::riesz(0.5), 4096},
  };
  for (const Case& c : cases) {
    const double ref = wiener_constant_quadrature(c.kernel, c.set);
    const double est = wiener_estimate(c.kernel, c.set, c.n);
    rep.meta[std::string(c.label) + "_n"] = c.n;
    rep.meta[std::string(c.label) + "_reference"] = ref;
    rep.verdicts.push_back(
        window_verdict(c.label, est, ref - w.wiener_tol, ref + w.wiener_tol));
  }

  ExperimentConfig files;
  files.name = "wiener-constants";
  files.out_dir = out_dir;
  write_report_files(files, rep, {});
  return rep;
}

Point rotate_xy(const Point& p, double ang) {
  const double c = std::cos(ang), s = std::sin(ang);
  return Point(c * p[0] - s * p[1], s * p[0] + c * p[1], p[2]);
}

/// Random 3x3 orthogonal matrix from Gram-Schmidt on Gaussian vectors.
std::array<Point, 3> random_rotation3(Rng& rng) {
  std::array<Point, 3> q;
  for (int i = 0; i < 3; ++i) {
    Point v(rng.normal(), rng.normal(), rng.normal());
    for (int j = 0; j < i; ++j) v -= dot(v, q[j]) * q[j];
    q[i] = (1.0 / norm(v)) * v;
  }
  return q;
}

Point apply_rotation3(const std::array<Point, 3>& rows, const Point& p) {
  return Point(dot(rows[0], p), dot(rows[1], p), dot(rows[2], p));
}

ScalingReport canned_hygiene(const std::string& out_dir) {
  const VerdictWindows& w = verdict_windows();
  ScalingReport rep;
  rep.meta["name"] = "numerical-hygiene";
  rep.meta["mode"] = "diagnostics";

  const std::vector<CompactSetSpec> sets = {
      CompactSetSpec::interval(), CompactSetSpec::circle(), CompactSetSpec::sphere2(),
      CompactSetSpec::disk(),     CompactSetSpec::ball3(),  CompactSetSpec::torus()};
  const std::vector<KernelSpec> kernels = {KernelSpec::riesz(0.5), KernelSpec::riesz(1.0),
                                           KernelSpec::riesz(1.5), KernelSpec::riesz(2.5),
                                           KernelSpec::log()};

  // Projection idempotence and sample membership.
  double worst_idem = 0.0, worst_member = 0.0;
  for (const CompactSetSpec& set : sets) {
    Rng rng(4242);
    for (int i = 0; i < 1000; ++i) {
      Point x;
      for (int d = 0; d < set.ambient_dim; ++d)
        x[d] = rng.uniform(-0.6 * set.diameter, 0.6 * set.diameter);
      const Point p1 = project(set, x);
      const Point p2 = project(set, p1);
      worst_idem = std::max(worst_idem, dist(p1, p2));
    }
    for (const Point& p : sample(set, 1000, 99))
      worst_member = std::max(worst_member, membership_residual(set, p));
  }
  rep.verdicts.push_back(upper_verdict("projection-idempotence", worst_idem, w.idempotence_tol));
  rep.verdicts.push_back(upper_verdict("sample-membership", worst_member, w.membership_tol));

  // Analytic gradient against central finite differences: 20 cases per set.
  double worst_fd = 0.0;
  for (const CompactSetSpec& set : sets) {
    for (int c = 0; c < 20; ++c) {
      const KernelSpec& k = kernels[static_cast<std::size_t>(c) % kernels.size()];
      std::vector<Point> pts;
      for (int attempt = 0; attempt < 50; ++attempt) {
        pts = sample(set, 8, Rng::mix(1000 + c, attempt));
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j)
            dmin = std::min(dmin, dist(pts[i], pts[j]));
        if (dmin > 0.05 * set.diameter) break;
      }
      const auto g = energy_gradient(k, pts);
      const auto g_fd = energy_gradient_fd(k, pts);
      double gmax = 0.0, emax = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        gmax = std::max(gmax, norm(g[i]));
        emax = std::max(emax, dist(g[i], g_fd[i]));
      }
      worst_fd = std::max(worst_fd, emax / std::max(1.0, gmax));
    }
  }
  rep.verdicts.push_back(upper_verdict("gradient-fd", worst_fd, w.grad_fd_rel_tol));

  // Permutation and isometry invariance of the energy.
  double worst_perm = 0.0, worst_rot = 0.0;
  {
    const KernelSpec k = KernelSpec::riesz(1.0);
    for (int c = 0; c < 5; ++c) {
      std::vector<Point> pts = sample(CompactSetSpec::sphere2(), 48, Rng::mix(77, c));
      const double e0 = energy_of_points(k, pts);
      std::vector<Point> rev(pts.rbegin(), pts.rend());
      std::rotate(rev.begin(), rev.begin() + 13, rev.end());
      worst_perm =
          std::max(worst_perm, std::abs(energy_of_points(k, rev) - e0) / std::abs(e0));

      Rng rng(Rng::mix(78, c));
      const auto rot = random_rotation3(rng);
      std::vector<Point> rotated;
      for (const Point& p : pts) rotated.push_back(apply_rotation3(rot, p));
      worst_rot =
          std::max(worst_rot, std::abs(energy_of_points(k, rotated) - e0) / std::abs(e0));
    }
    for (int c = 0; c < 5; ++c) {
      std::vector<Point> pts = sample(CompactSetSpec::circle(), 48, Rng::mix(79, c));
      const double e0 = energy_of_points(k, pts);
      std::vector<Point> rotated;
      for (const Point& p : pts) rotated.push_back(rotate_xy(p, 0.7368 + c));
      worst_rot =
          std::max(worst_rot, std::abs(energy_of_points(k, rotated) - e0) / std::abs(e0));
    }
  }
  rep.verdicts.push_back(upper_verdict("permutation-invariance", worst_perm, w.invariance_rel_tol));
  rep.verdicts.push_back(upper_verdict("isometry-invariance", worst_rot, w.invariance_rel_tol));

  // fit_exponent recovers planted power laws exactly.
  {
    std::vector<std::pair<double, double>> p1, p2;
    for (const int n : {64, 128, 256, 512}) {
      p1.emplace_back(n, 1.0 / n);
      p2.emplace_back(n, 3.0 * std::pow(n, -0.5));
    }
    const ExponentFit f1 = fit_exponent(p1);
    const ExponentFit f2 = fit_exponent(p2);
    const double worst = std::max({std::abs(f1.slope + 1.0), f1.residual_rms,
                                   std::abs(f2.slope + 0.5),
                                   std::abs(f2.intercept - std::log(3.0)), f2.residual_rms});
    rep.verdicts.push_back(upper_verdict("planted-power-law", worst, w.planted_fit_tol));
  }

  ExperimentConfig files;
  files.name = "numerical-hygiene";
  files.out_dir = out_dir;
  write_report_files(files, rep, {});
  return rep;
}

}  // namespace

std::vector<std::string> canned_experiment_names() {
  return {"fekete-interval",       "small-n-exact",        "separation-sphere2",
          "separation-torus",      "separation-disk",      "greedy-separation-s1.5",
          "greedy-separation-s3",  "greedy-covering",      "ball-equilibrium",
          "empirical-regularity",  "potential-flatness",   "wiener-constants",
          "numerical-hygiene"};
}

ScalingReport run_canned(const std::string& name, const std::string& out_dir) {
  if (name == "fekete-interval") return canned_fekete(out_dir);
  if (name == "small-n-exact") return canned_small_n(out_dir);
  if (name == "separation-sphere2") {
    ExperimentConfig cfg = scaling_cfg(name, CompactSetSpec::sphere2(), KernelSpec::riesz(1.5),
                                       out_dir);
    return run_experiment(cfg);
  }
  if (name == "separation-torus") {
    ExperimentConfig cfg =
        scaling_cfg(name, CompactSetSpec::torus(), KernelSpec::riesz(1.5), out_dir);
    return run_experiment(cfg);
  }
  if (name == "separation-disk") {
    ExperimentConfig cfg =
        scaling_cfg(name, CompactSetSpec::disk(), KernelSpec::riesz(1.0), out_dir);
    cfg.core_radius = 0.7;
    return run_experiment(cfg);
  }
  if (name == "greedy-separation-s1.5" || name == "greedy-separation-s3" ||
      name == "greedy-covering") {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.set = CompactSetSpec::sphere2();
    cfg.kernel = KernelSpec::riesz(name == "greedy-separation-s1.5" ? 1.5 : 3.0);
    cfg.mode = ExperimentMode::Greedy;
    cfg.n_schedule = {64, 128, 256, 512, 1024};
    cfg.seed = 2026;
    cfg.verdict_greedy_floor = true;
    if (name == "greedy-covering") {
      cfg.compute_eta = true;
      cfg.verdict_eta_slope = true;
    }
    cfg.out_dir = out_dir;
    return run_experiment(cfg);
  }
  if (name == "ball-equilibrium") return canned_ball_equilibrium(out_dir);
  if (name == "empirical-regularity") return canned_empirical_regularity(out_dir);
  if (name == "potential-flatness") return canned_potential_flatness(out_dir);
  if (name == "wiener-constants") return canned_wiener(out_dir);
  if (name == "numerical-hygiene") return canned_hygiene(out_dir);
  throw std::invalid_argument("unknown canned experiment: " + name);
}

}  // namespace rieszlab
