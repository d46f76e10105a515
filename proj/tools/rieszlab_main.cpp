#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rieszlab/diagnostics.hpp"
#include "rieszlab/energy.hpp"
#include "rieszlab/experiments.hpp"
#include "rieszlab/greedy.hpp"
#include "rieszlab/io.hpp"
#include "rieszlab/minimize.hpp"
#include "rieszlab/rng.hpp"

namespace {

using namespace rieszlab;

struct KernelOpts {
  double s = std::numeric_limits<double>::quiet_NaN();
  bool use_log = false;

  void attach(CLI::App* cmd) {
    auto* s_opt = cmd->add_option("--s", s, "Riesz exponent s > 0");
    auto* log_opt = cmd->add_flag("--log", use_log, "use the logarithmic kernel");
    s_opt->excludes(log_opt);
  }

  KernelSpec make() const {
    if (use_log) return KernelSpec::log();
    if (std::isnan(s)) throw CLI::ValidationError("kernel", "pass --s <exponent> or --log");
    return KernelSpec::riesz(s);
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << text;
}

int run_greedy(const std::string& set_name, const KernelOpts& ko, int n, std::uint64_t seed,
               int budget, const std::string& out, const std::string& report) {
  GreedyPlan plan;
  plan.set = CompactSetSpec::from_name(set_name);
  plan.kernel = ko.make();
  plan.n_max = n;
  plan.seed = seed;
  plan.candidate_budget = budget;
  const Configuration omega = greedy_sequence(plan);
  save_points(omega, out, plan.kernel);
  std::cout << "wrote " << omega.points.size() << " greedy points to " << out << "\n";

  if (!report.empty()) {
    ScalingReport rep;
    rep.meta["name"] = "greedy";
    rep.meta["set"] = plan.set.name();
    rep.meta["kernel"] = plan.kernel.name();
    rep.meta["seed"] = seed;
    ReportRow row;
    row.n = n;
    row.delta = n >= 2 ? separation(omega) : 0.0;
    row.energy = n >= 2 ? total_energy(plan.kernel, omega) : 0.0;
    rep.rows.push_back(row);
    if (n >= 64) {
      const GreedyFloor floor =
          greedy_separation_floor(omega, plan.set.intrinsic_dim, verdict_windows().greedy_floor_jmin);
      rep.meta["greedy_floor_min_m"] = floor.min_m;
      rep.meta["greedy_floor_median_m"] = floor.median_m;
    }
    write_text(report, rep.to_json().dump(2) + "\n");
  }
  return 0;
}

int run_minimize(const std::string& set_name, const KernelOpts& ko, int n, std::uint64_t seed,
                 int restarts, int max_iters, const std::string& out,
                 const std::string& report) {
  MinimizePlan plan;
  plan.set = CompactSetSpec::from_name(set_name);
  plan.kernel = ko.make();
  plan.n = n;
  plan.restarts = restarts;
  plan.max_iters = max_iters;
  const MinimizeResult res = minimize_energy(plan, seed);
  if (!out.empty()) save_points(res.config, out, plan.kernel);
  std::printf("n=%d energy=%.12g grad_norm=%.3g%s\n", n, res.energy, res.diagnostics.grad_norm,
              res.diagnostics.converged ? "" : " (max_iters hit)");

  if (!report.empty()) {
    ScalingReport rep;
    rep.meta["name"] = "minimize";
    rep.meta["set"] = plan.set.name();
    rep.meta["kernel"] = plan.kernel.name();
    rep.meta["seed"] = seed;
    rep.meta["converged"] = res.diagnostics.converged;
    rep.meta["iterations"] = res.diagnostics.iterations;
    rep.meta["grad_norm"] = res.diagnostics.grad_norm;
    ReportRow row;
    row.n = n;
    row.delta = separation(res.config);
    row.energy = res.energy;
    rep.rows.push_back(row);
    write_text(report, rep.to_json().dump(2) + "\n");
  }
  return 0;
}

int run_equilibrium(const std::string& set_name, const KernelOpts& ko, bool probe,
                    const std::string& out, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.name = "equilibrium";
  cfg.set = CompactSetSpec::from_name(set_name);
  cfg.kernel = ko.make();
  cfg.mode = ExperimentMode::Equilibrium;
  cfg.seed = seed;
  (void)probe;  // regularity probing is what the equilibrium report does
  const ScalingReport rep = run_experiment(cfg);
  std::cout << rep.summary();
  if (!out.empty()) write_text(out, rep.to_json().dump(2) + "\n");
  return rep.all_pass() ? 0 : 1;
}

int run_diagnose(const std::vector<std::string>& inputs, const std::string& set_name,
                 const std::string& report, double core_radius, std::size_t probe_budget,
                 std::uint64_t seed, bool eta) {
  std::optional<CompactSetSpec> fallback;
  if (!set_name.empty()) fallback = CompactSetSpec::from_name(set_name);

  ScalingReport rep;
  rep.meta["name"] = "diagnose";
  for (const std::string& path : inputs) {
    const PointsFile pf = load_points(path, fallback);
    const Configuration& c = pf.config;
    ReportRow row;
    row.n = static_cast<int>(c.points.size());
    if (c.points.size() >= 2) {
      row.delta = core_radius > 0.0
                      ? separation_restricted(
                            c, [core_radius](const Point& p) { return norm(p) <= core_radius; })
                      : separation(c);
      if (pf.kernel) row.energy = total_energy(*pf.kernel, c);
    }
    if (eta) {
      const CoveringResult cov = covering_radius(c, probe_budget, seed);
      row.eta_raw = cov.raw;
      row.eta = cov.refined;
    }
    rep.rows.push_back(row);
  }
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const ReportRow& a, const ReportRow& b) { return a.n < b.n; });

  std::vector<std::pair<double, double>> delta_pairs, eta_pairs;
  for (const ReportRow& r : rep.rows) {
    if (r.delta > 0.0) delta_pairs.emplace_back(r.n, r.delta);
    if (r.eta > 0.0) eta_pairs.emplace_back(r.n, r.eta);
  }
  if (delta_pairs.size() >= 4) {
    const ExponentFit f = fit_exponent(delta_pairs);
    rep.fits.push_back({"delta", f.slope, f.stderr_slope, f.residual_rms, rep.rows.front().n,
                        rep.rows.back().n});
  }
  if (eta_pairs.size() >= 4) {
    const ExponentFit f = fit_exponent(eta_pairs);
    rep.fits.push_back({"eta", f.slope, f.stderr_slope, f.residual_rms, rep.rows.front().n,
                        rep.rows.back().n});
  }
  std::cout << rep.summary();
  if (!report.empty()) write_text(report, rep.to_json().dump(2) + "\n");
  return 0;
}

int run_suite(const std::string& name, const std::string& config_path,
              const std::string& out_dir, bool list) {
  if (list) {
    for (const std::string& n : canned_experiment_names()) std::cout << n << "\n";
    return 0;
  }
  bool all_pass = true;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    nlohmann::json j;
    in >> j;
    ExperimentConfig cfg = ExperimentConfig::from_json(j);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    const ScalingReport rep = run_experiment(cfg);
    std::cout << rep.summary();
    all_pass = rep.all_pass();
  } else if (name == "acceptance") {
    for (const std::string& n : canned_experiment_names()) {
      const ScalingReport rep = run_canned(n, out_dir);
      std::cout << rep.summary();
      all_pass = all_pass && rep.all_pass();
    }
  } else {
    const ScalingReport rep = run_canned(name, out_dir);
    std::cout << rep.summary();
    all_pass = rep.all_pass();
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rieszlab: discrete and continuous Riesz energy experiments"};
  app.require_subcommand(1);

  // greedy
  auto* g = app.add_subcommand("greedy", "generate a greedy energy sequence");
  std::string g_set;
  KernelOpts g_k;
  int g_n = 64, g_budget = 4096;
  std::uint64_t g_seed = 1;
  std::string g_out, g_report;
  g->add_option("--set", g_set, "set name (interval, circle, sphere2, disk, ball3, torus)")
      ->required();
  g_k.attach(g);
  g->add_option("--n", g_n, "number of points")->check(CLI::PositiveNumber);
  g->add_option("--seed", g_seed, "RNG seed");
  g->add_option("--budget", g_budget, "candidates per step");
  g->add_option("--out", g_out, "points CSV output")->required();
  g->add_option("--report", g_report, "report JSON output");

  // minimize
  auto* m = app.add_subcommand("minimize", "multistart energy minimization");
  std::string m_set;
  KernelOpts m_k;
  int m_n = 64, m_restarts = 0, m_max_iters = 0;
  std::uint64_t m_seed = 1;
  std::string m_out, m_report;
  m->add_option("--set", m_set, "set name")->required();
  m_k.attach(m);
  m->add_option("--n", m_n, "number of points")->check(CLI::PositiveNumber);
  m->add_option("--seed", m_seed, "RNG seed");
  m->add_option("--restarts", m_restarts, "restarts (0 = default)");
  m->add_option("--max-iters", m_max_iters, "iteration cap (0 = default)");
  m->add_option("--out", m_out, "points CSV output");
  m->add_option("--report", m_report, "report JSON output");

  // equilibrium
  auto* e = app.add_subcommand("equilibrium", "closed-form equilibrium measure checks");
  std::string e_set, e_out;
  KernelOpts e_k;
  bool e_probe = false;
  std::uint64_t e_seed = 1;
  e->add_option("--set", e_set, "set name")->required();
  e_k.attach(e);
  e->add_flag("--probe-regularity", e_probe, "run the regularity probes");
  e->add_option("--out", e_out, "report JSON output");
  e->add_option("--seed", e_seed, "RNG seed");

  // diagnose
  auto* d = app.add_subcommand("diagnose", "diagnostics for stored point files");
  std::vector<std::string> d_in;
  std::string d_set, d_report;
  double d_core = 0.0;
  std::size_t d_probes = 20000;
  std::uint64_t d_seed = 1;
  bool d_eta = false;
  d->add_option("--in", d_in, "points CSV file(s)")->required()->expected(-1);
  d->add_option("--set", d_set, "set name for legacy files without metadata");
  d->add_option("--report", d_report, "report JSON output");
  d->add_option("--core-radius", d_core, "restrict separation to |x| <= r");
  d->add_option("--probe-budget", d_probes, "covering-radius probes");
  d->add_option("--seed", d_seed, "RNG seed");
  d->add_flag("--eta", d_eta, "also estimate the covering radius");

  // suite
  auto* s = app.add_subcommand("suite", "canned experiment suites");
  std::string s_name, s_config, s_out_dir;
  bool s_list = false;
  s->add_option("--name", s_name, "canned experiment name, or 'acceptance' for all");
  s->add_option("--config", s_config, "experiment config JSON");
  s->add_option("--out-dir", s_out_dir, "output directory for points and reports");
  s->add_flag("--list", s_list, "list canned experiment names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return run_greedy(g_set, g_k, g_n, g_seed, g_budget, g_out, g_report);
    if (m->parsed())
      return run_minimize(m_set, m_k, m_n, m_seed, m_restarts, m_max_iters, m_out, m_report);
    if (e->parsed()) return run_equilibrium(e_set, e_k, e_probe, e_out, e_seed);
    if (d->parsed())
      return run_diagnose(d_in, d_set, d_report, d_core, d_probes, d_seed, d_eta);
    if (s->parsed()) {
      if (!s_list && s_name.empty() && s_config.empty())
        throw CLI::ValidationError("suite", "pass --name, --config, or --list");
      return run_suite(s_name, s_config, s_out_dir, s_list);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
