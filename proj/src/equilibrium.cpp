#include "rieszlab/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

#include "rieszlab/minimize.hpp"
#include "rieszlab/parallel.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/rng.hpp"
#include "rieszlab/summation.hpp"

namespace rieszlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNearRadius = 0.05;   // stratification split |x - y| < r0
constexpr double kBallTol = 1e-9;      // per-piece quadrature tolerance
constexpr std::size_t kMcBlock = 8192; // MC samples per block

double clamp1(double v) { return std::clamp(v, -1.0, 1.0); }

const GaussRule& gauss32() {
  static const GaussRule rule = gauss_legendre(32);
  return rule;
}
}  // namespace

double EquilibriumMeasure::ball_exponent() const {
  return 0.5 * (kernel.s - static_cast<double>(ball_dim()));
}

EquilibriumMeasure EquilibriumMeasure::for_set(const CompactSetSpec& set,
                                               const KernelSpec& kernel) {
  EquilibriumMeasure em;
  em.set = set;
  em.kernel = kernel;
  const double s = kernel.s_or_zero();
  switch (set.kind) {
    case SetKind::Circle:
      if (!kernel.is_log() && s >= 1.0)
        throw std::invalid_argument("circle equilibrium measure needs s < 1 or log");
      em.form = MeasureForm::UniformCircle;
      em.normalization = 1.0 / (2.0 * kPi);
      return em;
    case SetKind::Sphere:
      if (!kernel.is_log() && s >= 2.0)
        throw std::invalid_argument("sphere equilibrium measure needs s < 2 or log");
      em.form = MeasureForm::UniformSphere;
      em.normalization = 1.0 / (4.0 * kPi);
      return em;
    case SetKind::Interval: {
      if (set.a != -1.0 || set.b != 1.0)
        throw std::invalid_argument("closed-form interval measure supports [-1, 1] only");
      if (kernel.is_log()) {
        em.form = MeasureForm::IntervalLogArcsine;
        em.normalization = 1.0 / kPi;
        return em;
      }
      if (s >= 1.0) throw std::invalid_argument("interval equilibrium measure needs s < 1");
      em.form = MeasureForm::BallClosedForm;
      break;
    }
    case SetKind::Disk:
    case SetKind::Ball: {
      const double ell = static_cast<double>(set.intrinsic_dim);
      if (kernel.is_log() || s <= ell - 2.0 || s >= ell)
        throw std::invalid_argument("ball equilibrium form needs s in (l-2, l)");
      em.form = MeasureForm::BallClosedForm;
      break;
    }
    case SetKind::Torus:
      throw std::invalid_argument("no closed-form equilibrium measure for the torus");
  }
  const double ell = static_cast<double>(set.intrinsic_dim);
  em.normalization = std::tgamma(1.0 + s / 2.0) /
                     (std::pow(kPi, ell / 2.0) * std::tgamma(1.0 + (s - ell) / 2.0));
  return em;
}

double density(const EquilibriumMeasure& em, const Point& x) {
  switch (em.form) {
    case MeasureForm::UniformCircle:
    case MeasureForm::UniformSphere:
      return em.normalization;
    case MeasureForm::IntervalLogArcsine: {
      const double t = 1.0 - x[0] * x[0];
      if (t < 0.0) return 0.0;
      if (t == 0.0) return std::numeric_limits<double>::infinity();
      return em.normalization / std::sqrt(t);
    }
    case MeasureForm::BallClosedForm: {
      double n2 = 0.0;
      for (int d = 0; d < em.set.ambient_dim; ++d) n2 += x[d] * x[d];
      const double t = 1.0 - n2;
      if (t < 0.0) return 0.0;
      if (t < 1e-300) return std::numeric_limits<double>::infinity();
      return em.normalization * std::pow(t, em.ball_exponent());
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

/// Angular weight of the sphere {|x| = rho} inside B(c, r) with D = |c|:
/// arc length factor for l = 2, spherical-cap solid angle for l = 3.
double angular_weight(int ell, double rho, double D, double r) {
  if (D < 1e-14) {
    const double full = (ell == 2) ? 2.0 * kPi : 4.0 * kPi;
    return rho <= r ? full : 0.0;
  }
  const double cphi = clamp1((rho * rho + D * D - r * r) / (2.0 * rho * D));
  if (ell == 2) return 2.0 * std::acos(cphi);
  return 2.0 * kPi * (1.0 - cphi);
}

/// mu(B(c, r)) for the ball form with l in {2, 3}: a 1-D radial integral of
/// M rho^{l-1} (1-rho^2)^alpha * w(rho). The boundary singularity is removed
/// by u = 1 - rho^2 followed by tau = u^{1+alpha}.
double ball_measure_radial(const EquilibriumMeasure& em, double D, double r) {
  const int ell = em.ball_dim();
  const double alpha = em.ball_exponent();
  const double M = em.normalization;

  if (r > D + 1.0) return 1.0;
  const double rho_lo = std::max(0.0, D - r);
  const double rho_hi = std::min(1.0, D + r);
  if (rho_lo >= 1.0 || rho_hi <= rho_lo) return 0.0;

  auto radial = [&](double rho) {
    const double t = 1.0 - rho * rho;
    const double base = (ell == 2) ? rho : rho * rho;
    return M * base * std::pow(t, alpha) * angular_weight(ell, rho, D, r);
  };

  // Segment boundaries: derivative kinks where the ball enters/exits.
  std::vector<double> cuts{rho_lo};
  const double inner_kink = std::abs(D - r);
  if (inner_kink > rho_lo + 1e-15 && inner_kink < rho_hi - 1e-15) cuts.push_back(inner_kink);
  cuts.push_back(rho_hi);

  double total = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double p = cuts[c], q = cuts[c + 1];
    if (q <= p) continue;
    if (q < 1.0 - 1e-12) {
      total += adaptive_simpson(radial, p, q, kBallTol);
      continue;
    }
    // Piece touching the boundary: integrate in tau = (1 - rho^2)^{1+alpha}.
    const double up = 1.0 - p * p;  // u decreases to 0 as rho -> 1
    const double e = 1.0 + alpha;   // in (0, 1]
    auto g = [&](double tau) {
      const double u = std::pow(tau, 1.0 / e);
      const double rho = std::sqrt(std::max(0.0, 1.0 - u));
      const double base = (ell == 2) ? 1.0 : rho;
      return 0.5 * M * base * angular_weight(ell, rho, D, r) / e;
    };
    total += adaptive_simpson(g, 0.0, std::pow(up, e), kBallTol);
  }
  return std::min(1.0, total);
}

double interval_ball_cdf(const EquilibriumMeasure& em, double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double alpha = em.ball_exponent();
  const double half = 0.5 * boost::math::ibeta(0.5, alpha + 1.0, x * x);
  return x >= 0.0 ? 0.5 + half : 0.5 - half;
}

}  // namespace

double measure_of_ball(const EquilibriumMeasure& em, const Point& center, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("measure_of_ball needs r > 0");
  switch (em.form) {
    case MeasureForm::UniformCircle: {
      const double D = std::hypot(center[0], center[1]);
      if (D < 1e-14) return r > 1.0 ? 1.0 : 0.0;
      const double cphi = clamp1((1.0 + D * D - r * r) / (2.0 * D));
      return std::acos(cphi) / kPi;
    }
    case MeasureForm::UniformSphere: {
      const double D = norm(center);
      if (D < 1e-14) return r > 1.0 ? 1.0 : 0.0;
      const double cth = clamp1((1.0 + D * D - r * r) / (2.0 * D));
      return 0.5 * (1.0 - cth);
    }
    case MeasureForm::IntervalLogArcsine: {
      const double lo = std::max(-1.0, center[0] - r);
      const double hi = std::min(1.0, center[0] + r);
      if (hi <= lo) return 0.0;
      return (std::asin(hi) - std::asin(lo)) / kPi;
    }
    case MeasureForm::BallClosedForm: {
      if (em.ball_dim() == 1) {
        const double lo = center[0] - r, hi = center[0] + r;
        return std::max(0.0, interval_ball_cdf(em, hi) - interval_ball_cdf(em, lo));
      }
      double D2 = 0.0;
      for (int d = 0; d < em.set.ambient_dim; ++d) D2 += center[d] * center[d];
      return ball_measure_radial(em, std::sqrt(D2), r);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

Point sample_measure_one(const EquilibriumMeasure& em, Rng& rng) {
  switch (em.form) {
    case MeasureForm::UniformCircle: {
      const double t = rng.uniform(0.0, 2.0 * kPi);
      return Point(std::cos(t), std::sin(t));
    }
    case MeasureForm::UniformSphere: {
      while (true) {
        const Point g(rng.normal(), rng.normal(), rng.normal());
        const double n = norm(g);
        if (n > 1e-8) return (1.0 / n) * g;
      }
    }
    case MeasureForm::IntervalLogArcsine:
      return Point(std::cos(kPi * rng.uniform()));
    case MeasureForm::BallClosedForm: {
      const int ell = em.ball_dim();
      const double a = 0.5 * ell;
      const double b = em.ball_exponent() + 1.0;
      double u = rng.uniform();
      u = std::min(std::max(u, 1e-16), 1.0 - 1e-16);
      const double rho = std::sqrt(boost::math::ibeta_inv(a, b, u));
      if (ell == 1) return Point(rng.uniform() < 0.5 ? -rho : rho);
      if (ell == 2) {
        const double t = rng.uniform(0.0, 2.0 * kPi);
        return Point(rho * std::cos(t), rho * std::sin(t));
      }
      while (true) {
        const Point g(rng.normal(), rng.normal(), rng.normal());
        const double n = norm(g);
        if (n > 1e-8) return (rho / n) * g;
      }
    }
  }
  throw std::logic_error("unreachable");
}

/// Deterministic quadrature of the near part int_{|x-y|<r0} k(|x-y|) dmu(x).
double near_part(const EquilibriumMeasure& em, const Point& y, double r0) {
  const KernelSpec& k = em.kernel;
  const double s = k.s_or_zero();
  const GaussRule& g32 = gauss32();

  switch (em.form) {
    case MeasureForm::UniformCircle: {
      const double off = std::abs(std::hypot(y[0], y[1]) - 1.0);
      if (off >= r0) return 0.0;
      if (off > 1e-9)
        throw std::domain_error("potential probe must be on the circle or clear of it");
      const double phi0 = 2.0 * std::asin(0.5 * r0);
      if (k.is_log()) {
        // -log(2 sin(phi/2)) = -log(phi) - log(2 sin(phi/2)/phi)
        auto smooth = [](double phi) {
          if (phi < 1e-12) return 0.0;
          return -std::log(2.0 * std::sin(0.5 * phi) / phi);
        };
        return (phi0 * (1.0 - std::log(phi0)) + integrate_gauss(g32, smooth, 0.0, phi0)) / kPi;
      }
      // (2 sin(phi/2))^{-s} = phi^{-s} h(phi); tau = phi^{1-s} removes the
      // endpoint singularity.
      auto h = [s](double phi) {
        if (phi < 1e-12) return 1.0;
        return std::pow(2.0 * std::sin(0.5 * phi) / phi, -s);
      };
      const double e = 1.0 - s;
      auto g = [&](double tau) { return h(std::pow(tau, 1.0 / e)) / e; };
      return integrate_gauss(g32, g, 0.0, std::pow(phi0, e)) / kPi;
    }
    case MeasureForm::UniformSphere: {
      const double off = std::abs(norm(y) - 1.0);
      if (off >= r0) return 0.0;
      if (off > 1e-9)
        throw std::domain_error("potential probe must be on the sphere or clear of it");
      // Fraction of the sphere within chord t of y is t^2/4.
      if (k.is_log()) return 0.25 * r0 * r0 * (-std::log(r0)) + 0.125 * r0 * r0;
      return std::pow(r0, 2.0 - s) / (2.0 * (2.0 - s));
    }
    case MeasureForm::IntervalLogArcsine: {
      const double yy = y[0];
      if (std::abs(yy) >= 1.0 + r0) return 0.0;
      if (std::abs(yy) > 1.0 - r0 - 0.01)
        throw std::domain_error("potential probe too close to the interval endpoints");
      const double rho_y = density(em, Point(yy));
      auto f = [&](double t) {
        if (std::abs(t) < 1e-300) return 0.0;
        return -std::log(std::abs(t)) * (density(em, Point(yy + t)) - rho_y);
      };
      const double base = rho_y * 2.0 * r0 * (1.0 - std::log(r0));
      return base + adaptive_simpson(f, -r0, 0.0, 1e-9) + adaptive_simpson(f, 0.0, r0, 1e-9);
    }
    case MeasureForm::BallClosedForm: {
      const int ell = em.ball_dim();
      double n2 = 0.0;
      for (int d = 0; d < em.set.ambient_dim; ++d) n2 += y[d] * y[d];
      const double ny = std::sqrt(n2);
      if (ny >= 1.0 + r0) return 0.0;
      if (ny > 1.0 - r0 - 0.01)
        throw std::domain_error("potential probe too close to the ball boundary");
      if (k.is_log()) throw std::domain_error("log potential unsupported on ball forms");
      const double alpha = em.ball_exponent();
      const double M = em.normalization;

      // Angular average of the density on the sphere of radius t around y.
      auto ring = [&](double t) {
        if (ell == 1) {
          return std::pow(1.0 - (ny + t) * (ny + t), alpha) +
                 std::pow(1.0 - (ny - t) * (ny - t), alpha);
        }
        if (ell == 2) {
          double acc = 0.0;
          const int m = 64;
          for (int i = 0; i < m; ++i) {
            const double th = 2.0 * kPi * i / m;
            const double xx = ny + t * std::cos(th);
            const double zz = t * std::sin(th);
            acc += std::pow(1.0 - xx * xx - zz * zz, alpha);
          }
          return acc * 2.0 * kPi / m;
        }
        // l = 3: integrate the polar angle against |y + t w|^2 = ny^2 + t^2 + 2 t ny c.
        auto fc = [&](double c) {
          return std::pow(1.0 - (n2 + t * t + 2.0 * t * ny * c), alpha);
        };
        return 2.0 * kPi * integrate_gauss(g32, fc, -1.0, 1.0);
      };

      // near = M int_0^{r0} t^{l-1-s} ring(t) dt, tau = t^{l-s}.
      const double e = static_cast<double>(ell) - s;
      auto g = [&](double tau) {
        const double t = std::pow(tau, 1.0 / e);
        return M * ring(t) / e;
      };
      return integrate_gauss(g32, g, 0.0, std::pow(r0, e));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<Point> sample_measure(const EquilibriumMeasure& em, std::size_t n,
                                  std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_measure needs n >= 1");
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_measure_one(em, rng));
  return out;
}

PotentialEstimate equilibrium_potential(const EquilibriumMeasure& em, const Point& y,
                                        std::size_t n_mc, std::uint64_t seed) {
  if (n_mc < 1000) throw std::invalid_argument("equilibrium_potential needs n_mc >= 1000");
  const double r0 = kNearRadius;
  const double near = near_part(em, y, r0);

  const std::size_t n_blocks = (n_mc + kMcBlock - 1) / kMcBlock;
  std::vector<double> sums(n_blocks, 0.0), sumsqs(n_blocks, 0.0);

  parallel_blocks(n_blocks, [&](std::size_t b) {
    const std::size_t lo = b * kMcBlock;
    const std::size_t hi = std::min(lo + kMcBlock, n_mc);
    Rng rng(Rng::mix(seed, 0xabcd0000u + b));
    CompensatedSum acc, acc2;
    for (std::size_t i = lo; i < hi; ++i) {
      const Point x = sample_measure_one(em, rng);
      const double r2 = dist2(x, y);
      double v = 0.0;
      if (r2 >= r0 * r0) v = em.kernel.eval_r2(r2);
      acc.add(v);
      acc2.add(v * v);
    }
    sums[b] = acc.value();
    sumsqs[b] = acc2.value();
  });

  CompensatedSum sum, sumsq;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    sum.add(sums[b]);
    sumsq.add(sumsqs[b]);
  }
  const double n = static_cast<double>(n_mc);
  const double mean = sum.value() / n;
  const double var = std::max(0.0, (sumsq.value() / n - mean * mean) * n / (n - 1.0));

  PotentialEstimate est;
  est.value = mean + near;
  est.std_error = std::sqrt(var / n);
  est.n_samples = n_mc;
  return est;
}

double wiener_estimate(const KernelSpec& k, const CompactSetSpec& set, int n) {
  if (n < 2) throw std::invalid_argument("wiener_estimate needs N >= 2");
  if (!k.is_log() && k.s >= static_cast<double>(set.intrinsic_dim))
    throw std::domain_error("infinite Wiener constant: s >= d means capacity zero");

  MinimizePlan plan;
  plan.kernel = k;
  plan.set = set;
  plan.n = n;
  plan.restarts = n <= 256 ? 3 : 1;
  plan.max_iters = n <= 512 ? 1200 : 160;
  const MinimizeResult res = minimize_energy(plan, /*seed=*/1);
  return res.energy / (static_cast<double>(n) * (n - 1.0));
}

double wiener_constant_quadrature(const KernelSpec& k, const CompactSetSpec& set) {
  const GaussRule g64 = gauss_legendre(64);
  if (set.kind == SetKind::Circle) {
    const double half = 0.5 * kPi;
    if (k.is_log()) {
      // (2/pi) int_0^{pi/2} -log(2 sin u) du, with the log u part in closed form.
      auto smooth = [](double u) {
        if (u < 1e-12) return 0.0;
        return -std::log(std::sin(u) / u) - std::log(2.0);
      };
      const double log_part = half * (1.0 - std::log(half));
      return (2.0 / kPi) * (log_part + integrate_gauss(g64, smooth, 0.0, half));
    }
    const double s = k.s;
    if (s >= 1.0) throw std::domain_error("circle Wiener constant infinite for s >= 1");
    auto h = [s](double u) {
      if (u < 1e-12) return std::pow(2.0, -s);
      return std::pow(2.0 * std::sin(u) / u, -s);
    };
    const double e = 1.0 - s;
    auto g = [&](double tau) { return h(std::pow(tau, 1.0 / e)) / e; };
    return (2.0 / kPi) * integrate_gauss(g64, g, 0.0, std::pow(half, e));
  }
  if (set.kind == SetKind::Interval && k.is_log() && set.a == -1.0 && set.b == 1.0) {
    // U at 0 of the arcsine measure: (2/pi) int_0^{pi/2} -log(sin w) dw.
    const double half = 0.5 * kPi;
    auto smooth = [](double w) {
      if (w < 1e-12) return 0.0;
      return -std::log(std::sin(w) / w);
    };
    return (2.0 / kPi) * (half * (1.0 - std::log(half)) + integrate_gauss(g64, smooth, 0.0, half));
  }
  throw std::invalid_argument("no quadrature reference for this (kernel, set)");
}

}  // namespace rieszlab
