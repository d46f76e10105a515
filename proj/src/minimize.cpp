#include "rieszlab/minimize.hpp"

#include <cmath>
#include <stdexcept>

#include "rieszlab/rng.hpp"

namespace rieszlab {

int MinimizePlan::effective_restarts() const {
  if (restarts > 0) return restarts;
  return n <= 64 ? 8 : 3;
}

int MinimizePlan::effective_max_iters() const {
  if (max_iters > 0) return max_iters;
  if (n <= 64) return 2000;
  if (n <= 256) return 1200;
  if (n <= 1024) return 700;
  return 500;
}

double MinimizePlan::effective_grad_tol() const {
  if (grad_tol > 0.0) return grad_tol;
  const double d = static_cast<double>(set.intrinsic_dim);
  return 1e-9 * std::pow(static_cast<double>(n), 1.0 + kernel.s_or_zero() / d);
}

double MinimizePlan::initial_step() const {
  const double d = static_cast<double>(set.intrinsic_dim);
  return step_rule.initial_step_factor * std::pow(static_cast<double>(n), -1.0 / d) *
         set.diameter;
}

void MinimizePlan::validate() const {
  if (n < 2) throw std::invalid_argument("minimize needs N >= 2");
  if (effective_restarts() < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!(effective_grad_tol() > 0.0)) throw std::invalid_argument("grad_tol must be > 0");
}

namespace {

std::vector<Point> effective_gradients(const CompactSetSpec& set,
                                       std::span<const Point> pts,
                                       const std::vector<Point>& grad) {
  std::vector<Point> eff(grad.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    eff[i] = effective_descent_gradient(set, pts[i], grad[i]);
  return eff;
}

struct ChainResult {
  std::vector<Point> pts;
  double energy = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;
  bool converged = false;
  double init_energy = 0.0;
};

/// One descent chain from a given start. Monotone in energy.
ChainResult run_chain(const MinimizePlan& plan, std::vector<Point> pts) {
  const KernelSpec& k = plan.kernel;
  const CompactSetSpec& set = plan.set;
  const double tol = plan.effective_grad_tol();
  const int max_iters = plan.effective_max_iters();
  const double c_armijo = plan.step_rule.sufficient_decrease;

  ChainResult res;
  double energy = energy_of_points(k, pts);
  res.init_energy = energy;

  double step = plan.initial_step();
  const double step_cap = 64.0 * plan.initial_step();
  const double step_floor = 1e-16 * set.diameter;

  int it = 0;
  double gnorm = 0.0;
  for (; it < max_iters; ++it) {
    const std::vector<Point> grad = energy_gradient(k, pts);
    const std::vector<Point> eff = effective_gradients(set, pts, grad);

    gnorm = 0.0;
    double g2 = 0.0;
    for (const Point& g : eff) {
      gnorm = std::max(gnorm, norm(g));
      g2 += norm2(g);
    }
    if (gnorm <= tol) {
      res.converged = true;
      break;
    }

    bool accepted = false;
    std::vector<Point> trial(pts.size());
    while (step > step_floor) {
      for (std::size_t i = 0; i < pts.size(); ++i)
        trial[i] = project(set, pts[i] - step * eff[i]);
      const double e_trial = energy_of_points_or_inf(k, trial);
      if (e_trial <= energy - c_armijo * step * g2) {
        pts.swap(trial);
        energy = e_trial;
        step = std::min(step * plan.step_rule.growth, step_cap);
        accepted = true;
        break;
      }
      step *= plan.step_rule.shrink;
    }
    if (!accepted) break;  // line search stalled at step_floor
  }

  res.pts = std::move(pts);
  res.energy = energy;
  res.iterations = it;
  res.grad_norm = gnorm;
  return res;
}

/// Initial sample with coincidence guard. Duplicate draws are vanishingly
/// rare but would poison the whole chain.
std::vector<Point> sample_start(const CompactSetSpec& set, int n, std::uint64_t seed) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Point> pts = sample(set, static_cast<std::size_t>(n),
                                    Rng::mix(seed, 0x5eedu + attempt));
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (dist2(pts[i], pts[j]) == 0.0) {
          ok = false;
          break;
        }
    if (ok) return pts;
  }
  throw std::runtime_error("could not draw a collision-free start");
}

}  // namespace

MinimizeResult minimize_energy(const MinimizePlan& plan, std::uint64_t seed) {
  plan.validate();
  const int restarts = plan.effective_restarts();

  ChainResult best;
  bool have_best = false;
  double best_init = std::numeric_limits<double>::infinity();

  for (int r = 0; r < restarts; ++r) {
    ChainResult chain = run_chain(plan, sample_start(plan.set, plan.n, Rng::mix(seed, r)));
    best_init = std::min(best_init, chain.init_energy);
    if (!have_best || chain.energy < best.energy) {
      best = std::move(chain);
      have_best = true;
    }
  }
  if (!have_best) throw std::runtime_error("all restarts failed");

  MinimizeResult out;
  out.config.set = plan.set;
  out.config.points = std::move(best.pts);
  out.config.provenance = Provenance::Minimized;
  out.config.seed = seed;
  out.energy = best.energy;
  out.diagnostics.restarts_run = restarts;
  out.diagnostics.iterations = best.iterations;
  out.diagnostics.grad_norm = best.grad_norm;
  out.diagnostics.converged = best.converged;
  out.diagnostics.best_init_energy = best_init;
  return out;
}

std::optional<Configuration> descend_step(const KernelSpec& k, const CompactSetSpec& set,
                                          const Configuration& omega, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("descend_step needs step > 0");
  const std::vector<Point> grad = energy_gradient(k, omega.points);
  Configuration out = omega;
  for (std::size_t i = 0; i < omega.points.size(); ++i) {
    const Point eff = effective_descent_gradient(set, omega.points[i], grad[i]);
    out.points[i] = project(set, omega.points[i] - step * eff);
  }
  for (std::size_t i = 0; i + 1 < out.points.size(); ++i)
    for (std::size_t j = i + 1; j < out.points.size(); ++j)
      if (dist2(out.points[i], out.points[j]) == 0.0) return std::nullopt;
  return out;
}

double projected_gradient_norm(const KernelSpec& k, const CompactSetSpec& set,
                               std::span<const Point> pts) {
  const std::vector<Point> grad = energy_gradient(k, pts);
  double gnorm = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    gnorm = std::max(gnorm, norm(effective_descent_gradient(set, pts[i], grad[i])));
  return gnorm;
}

}  // namespace rieszlab
