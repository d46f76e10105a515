#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rieszlab/configuration.hpp"
#include "rieszlab/kernel.hpp"
#include "rieszlab/report.hpp"

namespace rieszlab {

/// Every pass/fail window used by the canned experiments, in one place.
struct VerdictWindows {
  double slope_halfwidth = 0.15;            // exponent windows around -1/d
  double empirical_slope_halfwidth = 0.2;   // discrete-measure regularity slopes
  double measure_slope_halfwidth = 0.1;     // continuous-measure regularity slopes
  double greedy_floor_factor = 0.2;         // min m_j >= factor * median m_j
  int greedy_floor_jmin = 32;
  double wiener_tol = 0.02;
  double fekete_coord_tol = 1e-5;
  double pair_energy_tol = 1e-8;            // antipodal pair energy on the sphere
  double triangle_delta_tol = 1e-6;         // N=3 separation on the circle
  double normalization_tol = 1e-6;
  double ball_mass_tol = 1e-5;              // mu(B(0, 0.6)) on the disk, s=1
  double potential_range_factor = 4.0;      // interior max-min <= factor * max SE
  double exterior_margin_factor = 3.0;      // exterior <= interior mean + factor * SE
  double grad_fd_rel_tol = 1e-5;
  double invariance_rel_tol = 1e-9;
  double idempotence_tol = 1e-12;
  double membership_tol = 1e-12;
  double planted_fit_tol = 1e-12;
};

const VerdictWindows& verdict_windows();

enum class ExperimentMode { Greedy, Minimize, Equilibrium, ScalingSuite };

std::string mode_name(ExperimentMode m);
ExperimentMode mode_from_name(const std::string& name);

struct ExperimentConfig {
  std::string name = "experiment";
  CompactSetSpec set = CompactSetSpec::circle();
  KernelSpec kernel = KernelSpec::riesz(1.0);
  ExperimentMode mode = ExperimentMode::Minimize;
  std::vector<int> n_schedule{64};
  std::uint64_t seed = 1;

  int candidate_budget = 4096;   // greedy candidates per step
  int refine_steps = 50;
  std::size_t probe_budget = 20000;  // covering-radius probes
  int restarts = 0;              // 0 = minimizer default
  int max_iters = 0;             // 0 = minimizer default
  std::size_t mc_samples = 200000;
  double core_radius = 0.0;      // > 0: separation restricted to |x| <= core_radius
  bool compute_eta = false;

  std::string out_dir;           // empty: no files written
  bool write_points = true;

  bool verdict_delta_slope = false;
  bool verdict_eta_slope = false;
  bool verdict_greedy_floor = false;

  void validate() const;
  nlohmann::ordered_json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

/// Runs one experiment: generates configurations, computes diagnostics rows
/// and fits, evaluates requested verdicts, writes points/report/CSV files
/// when out_dir is set.
ScalingReport run_experiment(const ExperimentConfig& cfg);

/// Canned experiments; each acceptance check is runnable by name.
std::vector<std::string> canned_experiment_names();
ScalingReport run_canned(const std::string& name, const std::string& out_dir);

}  // namespace rieszlab
