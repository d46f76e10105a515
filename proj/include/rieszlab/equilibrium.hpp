#pragma once

#include <cstdint>
#include <vector>

#include "rieszlab/configuration.hpp"
#include "rieszlab/kernel.hpp"

namespace rieszlab {

enum class MeasureForm { BallClosedForm, UniformSphere, UniformCircle, IntervalLogArcsine };

/// Equilibrium measure in closed form on the supported sets:
///   interval  + log        -> arcsine density 1/(pi sqrt(1-x^2))
///   interval  + Riesz s<1  -> ball form, l = 1
///   circle    + s<1 or log -> uniform, 1/(2 pi)
///   sphere    + s<2 or log -> uniform, 1/(4 pi)
///   disk      + 0<s<2      -> ball form, l = 2
///   ball      + 1<s<3      -> ball form, l = 3
/// The ball form has density M (1-|x|^2)^{(s-l)/2} with
/// M = Gamma(1+s/2) / (pi^{l/2} Gamma(1+(s-l)/2)), valid for s in (l-2, l).
struct EquilibriumMeasure {
  CompactSetSpec set;
  KernelSpec kernel;
  MeasureForm form = MeasureForm::UniformCircle;
  double normalization = 1.0;  // M for the ball form; density constant otherwise

  /// Picks the closed form for (set, kernel); throws std::invalid_argument
  /// when no closed form is available (torus, disk/ball with log, s out of
  /// the validity range).
  static EquilibriumMeasure for_set(const CompactSetSpec& set, const KernelSpec& kernel);

  int ball_dim() const { return set.intrinsic_dim; }          // l for the ball form
  double ball_exponent() const;                               // (s - l)/2
};

/// Density with respect to the natural volume/surface/arclength measure.
/// Returns +inf on the ball-form boundary (the density diverges there) and 0
/// outside the set.
double density(const EquilibriumMeasure& em, const Point& x);

/// mu(B(center, r)) by closed form where available and adaptive radial
/// quadrature (absolute tolerance 1e-6) for the ball forms.
double measure_of_ball(const EquilibriumMeasure& em, const Point& center, double r);

/// i.i.d. draws: radial inverse-CDF for the ball forms, uniform otherwise.
std::vector<Point> sample_measure(const EquilibriumMeasure& em, std::size_t n,
                                  std::uint64_t seed);

struct PotentialEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

/// Monte Carlo estimate of the potential U(y) = int k(|y-x|) dmu(x) with the
/// singular part |x-y| < r0 = 0.05 integrated by deterministic quadrature
/// against the closed-form density and the rest by plain MC. The standard
/// error covers the MC part. Probe points must keep r0 clearance from the
/// ball-form boundary.
PotentialEstimate equilibrium_potential(const EquilibriumMeasure& em, const Point& y,
                                        std::size_t n_mc, std::uint64_t seed);

/// E(omega_N) / (N (N-1)) for a near-minimizer; converges to the minimal
/// continuous energy W_s(A) from below. Throws std::domain_error for Riesz
/// s >= d (capacity zero).
double wiener_estimate(const KernelSpec& k, const CompactSetSpec& set, int n);

/// Deterministic quadrature of the continuous energy of the uniform measure:
/// the independent reference for the Wiener checks. Supported for the circle
/// (Riesz s < 1 and log) and the interval with the log kernel.
double wiener_constant_quadrature(const KernelSpec& k, const CompactSetSpec& set);

}  // namespace rieszlab
