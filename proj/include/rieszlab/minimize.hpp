#pragma once

#include <cstdint>
#include <optional>

#include "rieszlab/configuration.hpp"
#include "rieszlab/energy.hpp"

namespace rieszlab {

struct StepRule {
  double initial_step_factor = 0.1;  // times N^{-1/d} * diam(A)
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;  // Armijo constant
  double growth = 2.0;                // step regrowth after an accepted step
};

struct MinimizePlan {
  KernelSpec kernel;
  CompactSetSpec set;
  int n = 2;
  int restarts = 0;      // 0 = default: 8 for n <= 64, else 3
  int max_iters = 0;     // 0 = default by n
  double grad_tol = 0.0; // 0 = default: 1e-9 * n^{1 + s/d}
  StepRule step_rule;

  int effective_restarts() const;
  int effective_max_iters() const;
  double effective_grad_tol() const;
  double initial_step() const;
  void validate() const;
};

struct MinimizeDiagnostics {
  int restarts_run = 0;
  int iterations = 0;         // iterations of the winning restart
  double grad_norm = 0.0;     // stationarity measure at return
  bool converged = false;     // grad_norm <= tol (false when max_iters hit)
  double best_init_energy = 0.0;
};

struct MinimizeResult {
  Configuration config;
  double energy = 0.0;
  MinimizeDiagnostics diagnostics;
};

/// Multistart projected gradient descent for the discrete energy on A.
/// Each restart starts from a uniform random sample; every accepted step
/// strictly decreases the energy; points stay on A throughout.
MinimizeResult minimize_energy(const MinimizePlan& plan, std::uint64_t seed);

/// One descent step: each point moves along its effective (tangential for
/// manifolds) negative gradient scaled by `step`, then re-projects onto A.
/// Returns nullopt when the step produces coincident points, signalling the
/// caller to backtrack.
std::optional<Configuration> descend_step(const KernelSpec& k, const CompactSetSpec& set,
                                          const Configuration& omega, double step);

/// Stationarity measure: max over points of |effective gradient| (2-norm per
/// point). Zero at constrained critical points, including boundary clamps.
double projected_gradient_norm(const KernelSpec& k, const CompactSetSpec& set,
                               std::span<const Point> pts);

}  // namespace rieszlab
