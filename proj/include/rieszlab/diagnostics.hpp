#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rieszlab/configuration.hpp"

namespace rieszlab {

/// Minimal pairwise distance. Grid-accelerated; agrees exactly with the
/// O(N^2) scan.
double separation(const Configuration& omega);

/// Plain O(N^2) separation (cross-check route).
double separation_naive(const Configuration& omega);

/// Separation restricted to pairs with at least one endpoint in the core
/// (used for interior subsets A' of sets with boundary).
double separation_restricted(const Configuration& omega,
                             const std::function<bool(const Point&)>& in_core);

struct CoveringResult {
  double raw = 0.0;      // max over uniform probes of the nearest-point distance
  double refined = 0.0;  // after local ascent from the best probe; >= raw
};

/// Covering radius estimate via uniform probes plus projected local ascent.
/// Both values are lower bounds on the true covering radius.
CoveringResult covering_radius(const Configuration& omega, std::size_t probe_budget,
                               std::uint64_t seed, int ascent_steps = 40);

/// Same, with caller-supplied probe points (deterministic comparisons).
CoveringResult covering_radius_with_probes(const Configuration& omega,
                                           const std::vector<Point>& probes,
                                           int ascent_steps = 40);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  double residual_rms = 0.0;  // RMS of log-space residuals
};

/// Least-squares slope of log(value) against log(N). Requires >= 4 pairs and
/// positive values.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& pairs);

struct RegularityResult {
  double slope = 0.0;
  std::vector<double> radii;   // radii that entered the fit
  std::vector<double> counts;  // |omega intersect B(x, r)| / N
};

/// Log-log slope of the empirical measure of balls around x. Radii whose raw
/// count is below 5 are dropped; fewer than 3 usable radii is an error.
RegularityResult empirical_regularity(const Configuration& omega, const Point& x,
                                      const std::vector<double>& radii);

/// Geometric radius grid r_max * 2^{-k}, largest first, k = 0 .. levels-1.
std::vector<double> geometric_radii(double r_max, int levels);

struct GreedyFloor {
  double min_m = 0.0;
  double median_m = 0.0;
  std::vector<double> m_series;         // m_j = min_{i<j} |a_i - a_j| * j^{1/d}
  std::vector<double> min_dist_series;  // min_{i<j} |a_i - a_j|
  std::vector<int> j_values;
};

/// Scaled nearest-predecessor distances of a greedy-ordered configuration.
GreedyFloor greedy_separation_floor(const Configuration& omega, int d, int j_min);

}  // namespace rieszlab
