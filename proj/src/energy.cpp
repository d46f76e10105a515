#include "rieszlab/energy.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "rieszlab/parallel.hpp"
#include "rieszlab/summation.hpp"

namespace rieszlab {

namespace {

constexpr std::size_t kRowBlock = 64;        // rows per pair-sum block
constexpr std::size_t kCandidateBlock = 256; // candidates per scan block
constexpr std::size_t kSerialCutoff = 96;    // below this N the pair loops run inline

double pair_sum_blocked(const KernelSpec& k, std::span<const Point> pts, bool* collided) {
  const std::size_t n = pts.size();
  const std::size_t n_blocks = (n + kRowBlock - 1) / kRowBlock;
  std::vector<double> block_sum(n_blocks, 0.0);
  std::atomic<bool> hit{false};

  auto run_block = [&](std::size_t b) {
    const std::size_t lo = b * kRowBlock;
    const std::size_t hi = std::min(lo + kRowBlock, n);
    CompensatedSum acc;
    for (std::size_t i = lo; i < hi; ++i) {
      const Point& xi = pts[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        const double r2 = dist2(xi, pts[j]);
        if (r2 == 0.0) {
          hit.store(true, std::memory_order_relaxed);
          return;
        }
        acc.add(k.eval_r2(r2));
      }
    }
    block_sum[b] = acc.value();
  };

  if (n <= kSerialCutoff) {
    for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    parallel_blocks(n_blocks, run_block);
  }

  *collided = hit.load();
  if (*collided) return 0.0;
  CompensatedSum total;
  for (double s : block_sum) total.add(s);
  return 2.0 * total.value();  // ordered-pair convention
}

}  // namespace

double energy_of_points(const KernelSpec& k, std::span<const Point> pts) {
  if (pts.size() < 2) throw std::invalid_argument("energy needs N >= 2 points");
  bool collided = false;
  const double e = pair_sum_blocked(k, pts, &collided);
  if (collided) throw std::domain_error("coincident points in configuration");
  return e;
}

double energy_of_points_or_inf(const KernelSpec& k, std::span<const Point> pts) {
  bool collided = false;
  const double e = pair_sum_blocked(k, pts, &collided);
  return collided ? std::numeric_limits<double>::infinity() : e;
}

double total_energy(const KernelSpec& k, const Configuration& omega) {
  return energy_of_points(k, omega.points);
}

double potential_sum(const KernelSpec& k, std::span<const Point> pts, const Point& y) {
  CompensatedSum acc;
  for (const Point& x : pts) {
    const double r2 = dist2(x, y);
    if (r2 == 0.0) return kOccupied;
    acc.add(k.eval_r2(r2));
  }
  return acc.value();
}

double potential_sum(const KernelSpec& k, const Configuration& omega, const Point& y) {
  return potential_sum(k, std::span<const Point>(omega.points), y);
}

namespace {

/// Projected descent of the potential y -> sum_j k(|y - x_j|) on A, starting
/// from y0. Monotone: never returns a higher value than f(y0).
PolarizationResult refine_on_set(const KernelSpec& k, const CompactSetSpec& set,
                                 std::span<const Point> pts, Point y0, double f0,
                                 int steps) {
  Point y = y0;
  double f = f0;

  // Nearest configuration point sets the natural step scale.
  double near2 = std::numeric_limits<double>::infinity();
  for (const Point& x : pts) near2 = std::min(near2, dist2(x, y));
  double step = 0.25 * std::sqrt(near2);
  const double step_floor = 1e-14 * set.diameter;

  for (int it = 0; it < steps && step > step_floor; ++it) {
    Point g;
    for (const Point& x : pts) {
      const double r2 = dist2(x, y);
      g += k.potential_grad_coef_r2(r2) * (y - x);
    }
    const Point ge = effective_descent_gradient(set, y, g);
    const double gn = norm(ge);
    if (gn == 0.0) break;
    const Point dir = (1.0 / gn) * ge;

    bool accepted = false;
    for (int bt = 0; bt < 24; ++bt) {
      const Point cand = project(set, y - step * dir);
      const double fc = potential_sum(k, pts, cand);
      if (fc < f) {
        y = cand;
        f = fc;
        step *= 1.5;
        accepted = true;
        break;
      }
      step *= 0.5;
      if (step <= step_floor) break;
    }
    if (!accepted) break;
  }
  return {y, f, 0};
}

}  // namespace

PolarizationResult polarization_min(const KernelSpec& k, const Configuration& omega,
                                    const std::vector<Point>& candidates, bool refine,
                                    int refine_steps) {
  if (candidates.empty()) throw std::invalid_argument("polarization needs candidates");
  const std::span<const Point> pts(omega.points);

  const std::size_t n_blocks = (candidates.size() + kCandidateBlock - 1) / kCandidateBlock;
  std::vector<std::pair<double, std::size_t>> best_per_block(
      n_blocks, {std::numeric_limits<double>::infinity(), 0});

  auto scan_block = [&](std::size_t b) {
    const std::size_t lo = b * kCandidateBlock;
    const std::size_t hi = std::min(lo + kCandidateBlock, candidates.size());
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = potential_sum(k, pts, candidates[i]);
      if (v < best) {
        best = v;
        best_i = i;
      }
    }
    best_per_block[b] = {best, best_i};
  };

  if (candidates.size() * omega.size() <= 32768) {
    for (std::size_t b = 0; b < n_blocks; ++b) scan_block(b);
  } else {
    parallel_blocks(n_blocks, scan_block);
  }

  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (const auto& [v, i] : best_per_block) {
    if (v < best) {  // blocks visited in index order: lowest index wins ties
      best = v;
      best_i = i;
    }
  }
  if (std::isinf(best))
    throw std::domain_error("all polarization candidates coincide with configuration points");

  PolarizationResult res{candidates[best_i], best, best_i};
  if (refine && refine_steps > 0) {
    PolarizationResult refined =
        refine_on_set(k, omega.set, pts, res.point, res.value, refine_steps);
    refined.candidate_index = best_i;
    return refined;
  }
  return res;
}

std::vector<Point> energy_gradient(const KernelSpec& k, std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 2) throw std::invalid_argument("gradient needs N >= 2 points");
  std::atomic<bool> hit{false};

  // Each pair is visited once; blocks accumulate into private scratch that is
  // merged in block order, so results do not depend on the worker count.
  const std::size_t n_blocks = (n + kRowBlock - 1) / kRowBlock;
  std::vector<std::vector<Point>> partial(n_blocks);
  auto run_block = [&](std::size_t b) {
    const std::size_t lo = b * kRowBlock;
    const std::size_t hi = std::min(lo + kRowBlock, n);
    std::vector<Point>& g = partial[b];
    g.assign(n, Point());
    for (std::size_t i = lo; i < hi; ++i) {
      const Point& xi = pts[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        const double r2 = dist2(xi, pts[j]);
        if (r2 == 0.0) {
          hit.store(true, std::memory_order_relaxed);
          return;
        }
        const Point d = (xi - pts[j]) * k.grad_coef_r2(r2);
        g[i] += d;
        g[j] -= d;
      }
    }
  };

  if (n <= kSerialCutoff) {
    for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    parallel_blocks(n_blocks, run_block);
  }

  if (hit.load()) throw std::domain_error("coincident points in configuration");
  std::vector<Point> grad(n);
  for (const std::vector<Point>& g : partial)
    for (std::size_t i = 0; i < n; ++i) grad[i] += g[i];
  return grad;
}

std::vector<Point> energy_gradient(const KernelSpec& k, const Configuration& omega) {
  return energy_gradient(k, std::span<const Point>(omega.points));
}

std::vector<Point> energy_gradient_fd(const KernelSpec& k, std::span<const Point> pts,
                                      double h) {
  std::vector<Point> work(pts.begin(), pts.end());
  std::vector<Point> grad(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int d = 0; d < 3; ++d) {
      const double saved = work[i][d];
      work[i][d] = saved + h;
      const double ep = energy_of_points(k, work);
      work[i][d] = saved - h;
      const double em = energy_of_points(k, work);
      work[i][d] = saved;
      grad[i][d] = (ep - em) / (2.0 * h);
    }
  }
  return grad;
}

}  // namespace rieszlab
