#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "rieszlab/configuration.hpp"
#include "rieszlab/kernel.hpp"

namespace rieszlab {

/// Discrete energy over ordered pairs: E = sum_{i != j} k(|x_i - x_j|).
/// Each unordered pair is counted twice. Compensated block summation keeps the
/// value permutation-stable at N up to 4096. Throws std::domain_error on
/// coincident points.
double total_energy(const KernelSpec& k, const Configuration& omega);

/// Same, on a raw point list (optimizer inner loops; no on-set validation).
double energy_of_points(const KernelSpec& k, std::span<const Point> pts);

/// As energy_of_points but returns +inf instead of throwing when two points
/// coincide; line searches treat that as a rejected step.
double energy_of_points_or_inf(const KernelSpec& k, std::span<const Point> pts);

/// Discrete potential sum_j k(|y - x_j|). Returns +inf (not an exception)
/// when y coincides with a configuration point, so candidate scans simply
/// never select an occupied site.
double potential_sum(const KernelSpec& k, std::span<const Point> pts, const Point& y);
double potential_sum(const KernelSpec& k, const Configuration& omega, const Point& y);

constexpr double kOccupied = std::numeric_limits<double>::infinity();

struct PolarizationResult {
  Point point;
  double value = 0.0;
  std::size_t candidate_index = 0;  // index of the winning raw candidate
};

/// Minimum of the discrete potential over a candidate set, with ties broken
/// by lowest candidate index. With refine = true the best candidate is
/// followed by projected descent of the potential on A, so the returned value
/// is <= the minimum over the raw candidates. Throws std::domain_error when
/// every candidate coincides with a configuration point.
PolarizationResult polarization_min(const KernelSpec& k, const Configuration& omega,
                                    const std::vector<Point>& candidates, bool refine,
                                    int refine_steps = 50);

/// Ambient gradient of total_energy:
///   dE/dx_i = -2s sum_{j != i} (x_i - x_j) / |x_i - x_j|^{s+2}   (Riesz)
///   dE/dx_i = -2  sum_{j != i} (x_i - x_j) / |x_i - x_j|^2       (Log)
/// Throws std::domain_error on coincident points.
std::vector<Point> energy_gradient(const KernelSpec& k, std::span<const Point> pts);
std::vector<Point> energy_gradient(const KernelSpec& k, const Configuration& omega);

/// Central finite-difference gradient (step h per coordinate); the slow
/// independent route used by the hygiene checks.
std::vector<Point> energy_gradient_fd(const KernelSpec& k, std::span<const Point> pts,
                                      double h = 1e-6);

}  // namespace rieszlab
