#pragma once

// Test-side oracles: slow independent routes used to pin expected values.
// Nothing here touches the implementation paths under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "rieszlab/energy.hpp"
#include "rieszlab/geometry.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/rng.hpp"

namespace oracles {

using rieszlab::Configuration;
using rieszlab::KernelSpec;
using rieszlab::Point;

constexpr double kPi = std::numbers::pi;

// chi-square 0.999 quantile, 15 degrees of freedom (16 bins)
constexpr double kChi2_15_999 = 37.6973;

/// Brute-force minimum of the discrete potential over a fine grid on [-1, 1].
inline std::pair<double, double> interval_polarization_grid(const KernelSpec& k,
                                                            const std::vector<double>& xs,
                                                            int grid = 200001) {
  double best_y = 0.0, best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double y = -1.0 + 2.0 * i / (grid - 1);
    double v = 0.0;
    bool occ = false;
    for (const double x : xs) {
      const double r = std::abs(y - x);
      if (r == 0.0) {
        occ = true;
        break;
      }
      v += k.eval(r);
    }
    if (!occ && v < best_v) {
      best_v = v;
      best_y = y;
    }
  }
  return {best_y, best_v};
}

/// Brute force over the two free angles of a 3-point configuration on the
/// unit circle (first point pinned at angle 0 by rotation invariance).
inline double circle_three_point_min_energy(const KernelSpec& k, int grid = 720) {
  auto chord = [](double a, double b) { return 2.0 * std::abs(std::sin(0.5 * (a - b))); };
  double best = std::numeric_limits<double>::infinity();
  for (int i = 1; i < grid; ++i) {
    const double t2 = 2.0 * kPi * i / grid;
    for (int j = i + 1; j < grid; ++j) {
      const double t3 = 2.0 * kPi * j / grid;
      const double e = 2.0 * (k.eval(chord(0.0, t2)) + k.eval(chord(0.0, t3)) +
                              k.eval(chord(t2, t3)));
      best = std::min(best, e);
    }
  }
  return best;
}

/// Gauss-Lobatto points: the minimizers of the discrete log-energy on [-1,1].
inline std::vector<Point> lobatto_points(int n) {
  std::vector<double> nodes = rieszlab::legendre_derivative_roots(n - 1);
  nodes.insert(nodes.begin(), -1.0);
  nodes.push_back(1.0);
  std::vector<Point> pts;
  for (const double x : nodes) pts.push_back(Point(x));
  return pts;
}

/// Energy of n equally spaced points on the unit circle (optimal there).
inline double equally_spaced_circle_energy(const KernelSpec& k, int n) {
  double sum = 0.0;
  for (int j = 1; j < n; ++j) sum += k.eval(2.0 * std::sin(kPi * j / n));
  return static_cast<double>(n) * sum;
}

/// Dyadic bit-reversal ordering of 2^levels equally spaced circle points;
/// prefixes stay nearly equally spaced, mimicking a greedy ordering.
inline std::vector<Point> bit_reversal_circle(int levels) {
  const int n = 1 << levels;
  std::vector<Point> pts;
  for (int j = 0; j < n; ++j) {
    int rev = 0;
    for (int b = 0; b < levels; ++b)
      if (j & (1 << b)) rev |= 1 << (levels - 1 - b);
    const double t = 2.0 * kPi * rev / n;
    pts.push_back(Point(std::cos(t), std::sin(t)));
  }
  return pts;
}

/// chi-square statistic for equal-probability bins.
inline double chi_square(const std::vector<std::size_t>& counts, std::size_t total) {
  const double expected = static_cast<double>(total) / counts.size();
  double stat = 0.0;
  for (const std::size_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

/// 2-D Cartesian adaptive quadrature of a density over a disk-interior ball:
/// the independent cross-check for the radial route.
inline double disk_ball_mass_cartesian(const std::function<double(double, double)>& density,
                                       double cx, double cy, double r, double tol = 1e-8) {
  auto inner = [&](double x) {
    const double hw = std::sqrt(std::max(0.0, r * r - (x - cx) * (x - cx)));
    if (hw == 0.0) return 0.0;
    return rieszlab::adaptive_simpson([&](double y) { return density(x, y); }, cy - hw,
                                      cy + hw, tol * 0.1);
  };
  return rieszlab::adaptive_simpson(inner, cx - r, cx + r, tol);
}

/// Random rotation fixing the unit circle (2-D) applied to ambient points.
inline std::vector<Point> rotate_all_2d(const std::vector<Point>& pts, double ang) {
  std::vector<Point> out;
  const double c = std::cos(ang), s = std::sin(ang);
  for (const Point& p : pts) out.push_back(Point(c * p[0] - s * p[1], s * p[0] + c * p[1]));
  return out;
}

/// Random orthogonal 3x3 (Gram-Schmidt on Gaussian vectors).
inline std::vector<Point> rotate_all_3d(const std::vector<Point>& pts, std::uint64_t seed) {
  rieszlab::Rng rng(seed);
  Point q[3];
  for (int i = 0; i < 3; ++i) {
    Point v(rng.normal(), rng.normal(), rng.normal());
    for (int j = 0; j < i; ++j) v -= dot(v, q[j]) * q[j];
    q[i] = (1.0 / norm(v)) * v;
  }
  std::vector<Point> out;
  for (const Point& p : pts) out.push_back(Point(dot(q[0], p), dot(q[1], p), dot(q[2], p)));
  return out;
}

}  // namespace oracles
