#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "rieszlab/diagnostics.hpp"
#include "rieszlab/equilibrium.hpp"

using namespace rieszlab;

namespace {

EquilibriumMeasure disk_s1() {
  return EquilibriumMeasure::for_set(CompactSetSpec::disk(), KernelSpec::riesz(1.0));
}

}  // namespace

TEST_CASE("closed forms exist exactly where expected") {
  CHECK_NOTHROW(EquilibriumMeasure::for_set(CompactSetSpec::circle(), KernelSpec::riesz(0.5)));
  CHECK_NOTHROW(EquilibriumMeasure::for_set(CompactSetSpec::circle(), KernelSpec::log()));
  CHECK_NOTHROW(EquilibriumMeasure::for_set(CompactSetSpec::sphere2(), KernelSpec::riesz(1.5)));
  CHECK_NOTHROW(EquilibriumMeasure::for_set(CompactSetSpec::interval(), KernelSpec::log()));
  CHECK_NOTHROW(EquilibriumMeasure::for_set(CompactSetSpec::interval(), KernelSpec::riesz(0.5)));
  CHECK_NOTHROW(EquilibriumMeasure::for_set(CompactSetSpec::ball3(), KernelSpec::riesz(2.0)));
  CHECK_THROWS(EquilibriumMeasure::for_set(CompactSetSpec::circle(), KernelSpec::riesz(1.0)));
  CHECK_THROWS(EquilibriumMeasure::for_set(CompactSetSpec::disk(), KernelSpec::log()));
  CHECK_THROWS(EquilibriumMeasure::for_set(CompactSetSpec::disk(), KernelSpec::riesz(2.0)));
  CHECK_THROWS(EquilibriumMeasure::for_set(CompactSetSpec::ball3(), KernelSpec::riesz(0.5)));
  CHECK_THROWS(EquilibriumMeasure::for_set(CompactSetSpec::torus(), KernelSpec::riesz(1.5)));
}

TEST_CASE("disk density values from the closed form") {
  const EquilibriumMeasure em = disk_s1();
  CHECK(em.normalization == doctest::Approx(1.0 / (2 * oracles::kPi)).epsilon(1e-13));
  CHECK(density(em, Point(0, 0)) == doctest::Approx(0.15915494309189535).epsilon(1e-12));
  CHECK(density(em, Point(0.8, 0)) == doctest::Approx(0.26525823848649227).epsilon(1e-12));
  CHECK(std::isinf(density(em, Point(1.0, 0.0))));
  CHECK(density(em, Point(1.5, 0.0)) == 0.0);

  const EquilibriumMeasure uc =
      EquilibriumMeasure::for_set(CompactSetSpec::circle(), KernelSpec::riesz(0.5));
  CHECK(density(uc, Point(0, 1)) == doctest::Approx(1.0 / (2 * oracles::kPi)));
}

TEST_CASE("ball measures: normalization, central mass, two independent routes") {
  const EquilibriumMeasure em = disk_s1();
  CHECK(measure_of_ball(em, Point(), 1.0) == doctest::Approx(1.0).epsilon(1e-6));
  // radial closed form: mu(B(0,r)) = 1 - sqrt(1 - r^2)
  CHECK(measure_of_ball(em, Point(), 0.6) == doctest::Approx(0.2).epsilon(1e-6));
  for (const double r : {0.2, 0.45, 0.85}) {
    CHECK(measure_of_ball(em, Point(), r) ==
          doctest::Approx(1.0 - std::sqrt(1.0 - r * r)).epsilon(1e-6));
  }
  // independent Cartesian quadrature for interior balls (on- and off-center)
  auto rho = [&](double x, double y) { return density(em, Point(x, y)); };
  CHECK(measure_of_ball(em, Point(), 0.6) ==
        doctest::Approx(oracles::disk_ball_mass_cartesian(rho, 0.0, 0.0, 0.6)).epsilon(2e-6));
  CHECK(measure_of_ball(em, Point(0.3, 0.2), 0.25) ==
        doctest::Approx(oracles::disk_ball_mass_cartesian(rho, 0.3, 0.2, 0.25)).epsilon(2e-6));

  // other closed forms normalize too
  const EquilibriumMeasure iv =
      EquilibriumMeasure::for_set(CompactSetSpec::interval(), KernelSpec::riesz(0.5));
  CHECK(measure_of_ball(iv, Point(), 1.0) == doctest::Approx(1.0).epsilon(1e-9));
  const EquilibriumMeasure b3 =
      EquilibriumMeasure::for_set(CompactSetSpec::ball3(), KernelSpec::riesz(2.0));
  CHECK(measure_of_ball(b3, Point(), 1.0) == doctest::Approx(1.0).epsilon(1e-6));
  const EquilibriumMeasure arc =
      EquilibriumMeasure::for_set(CompactSetSpec::interval(), KernelSpec::log());
  CHECK(measure_of_ball(arc, Point(), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(measure_of_ball(arc, Point(0.5), 0.25) ==
        doctest::Approx((std::asin(0.75) - std::asin(0.25)) / oracles::kPi).epsilon(1e-12));
}

TEST_CASE("boundary mass scales with exponent (l+s)/2 on the disk") {
  const EquilibriumMeasure em = disk_s1();
  std::vector<std::pair<double, double>> pairs;
  for (int k = 0; k < 7; ++k) {
    const double r = 0.02 * std::pow(10.0, k / 6.0);
    pairs.emplace_back(r, measure_of_ball(em, Point(1.0, 0.0), r));
  }
  const ExponentFit fit = fit_exponent(pairs);
  CHECK(fit.slope == doctest::Approx(1.5).epsilon(0.067));  // 1.5 +- 0.1
}

TEST_CASE("sampling follows the radial law") {
  const EquilibriumMeasure em = disk_s1();
  const auto pts = sample_measure(em, 100000, 77);
  std::size_t outer = 0;
  for (const Point& p : pts) {
    REQUIRE(norm(p) <= 1.0 + 1e-12);
    outer += norm(p) > 0.8;
  }
  // P(|x| > 0.8) = sqrt(1 - 0.64) = 0.6
  CHECK(std::abs(outer / 100000.0 - 0.6) < 0.01);

  const EquilibriumMeasure uc =
      EquilibriumMeasure::for_set(CompactSetSpec::circle(), KernelSpec::riesz(0.5));
  std::vector<std::size_t> bins(16, 0);
  for (const Point& p : sample_measure(uc, 10000, 5)) {
    double t = std::atan2(p[1], p[0]);
    if (t < 0) t += 2 * oracles::kPi;
    bins[std::min<std::size_t>(15, static_cast<std::size_t>(t / (2 * oracles::kPi) * 16))]++;
  }
  CHECK(oracles::chi_square(bins, 10000) < oracles::kChi2_15_999);

  CHECK(sample_measure(em, 1, 9).size() == 1);
}

TEST_CASE("arcsine sampling matches its cdf") {
  const EquilibriumMeasure arc =
      EquilibriumMeasure::for_set(CompactSetSpec::interval(), KernelSpec::log());
  const auto pts = sample_measure(arc, 50000, 13);
  std::size_t in_half = 0;
  for (const Point& p : pts) in_half += std::abs(p[0]) > 0.5;
  // P(|x| > 1/2) = 1 - 2 asin(1/2)/pi = 2/3
  CHECK(std::abs(in_half / 50000.0 - 2.0 / 3.0) < 0.01);
}

TEST_CASE("potential on the circle: log potential vanishes") {
  const EquilibriumMeasure uc =
      EquilibriumMeasure::for_set(CompactSetSpec::circle(), KernelSpec::log());
  const PotentialEstimate est = equilibrium_potential(uc, Point(1, 0), 100000, 3);
  CHECK(std::abs(est.value) <= 3.0 * est.std_error + 1e-4);
  CHECK(wiener_constant_quadrature(KernelSpec::log(), CompactSetSpec::circle()) ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("potential on the circle is rotation invariant") {
  const EquilibriumMeasure uc =
      EquilibriumMeasure::for_set(CompactSetSpec::circle(), KernelSpec::riesz(0.5));
  const PotentialEstimate a = equilibrium_potential(uc, Point(1, 0), 100000, 3);
  const PotentialEstimate b = equilibrium_potential(uc, Point(0, 1), 100000, 4);
  const double se = std::hypot(a.std_error, b.std_error);
  CHECK(std::abs(a.value - b.value) <= 3.0 * se);
  // both match the quadrature constant
  const double w = wiener_constant_quadrature(KernelSpec::riesz(0.5), CompactSetSpec::circle());
  CHECK(std::abs(a.value - w) <= 4.0 * a.std_error);
}

TEST_CASE("disk potential is flat inside") {
  const EquilibriumMeasure em = disk_s1();
  const PotentialEstimate center = equilibrium_potential(em, Point(0, 0), 150000, 5);
  const PotentialEstimate off = equilibrium_potential(em, Point(0.5, 0), 150000, 6);
  const double se = std::hypot(center.std_error, off.std_error);
  CHECK(std::abs(center.value - off.value) <= 3.0 * se);
  // classical constant for the disk at s = 1 is pi/2
  CHECK(std::abs(center.value - oracles::kPi / 2) <= 4.0 * center.std_error);
  // probes too close to the rim are rejected rather than silently biased
  CHECK_THROWS(equilibrium_potential(em, Point(0.98, 0), 10000, 7));
  CHECK_THROWS(equilibrium_potential(em, Point(0, 0), 10, 7));
}

TEST_CASE("quadrature references match classical closed forms") {
  CHECK(wiener_constant_quadrature(KernelSpec::log(), CompactSetSpec::interval()) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));
  // Gamma((1-s)/2) / (sqrt(pi) Gamma(1-s/2)) * 2^{-s} at s = 1/2
  const double closed = std::pow(2.0, -0.5) * std::tgamma(0.25) /
                        (std::sqrt(oracles::kPi) * std::tgamma(0.75));
  CHECK(wiener_constant_quadrature(KernelSpec::riesz(0.5), CompactSetSpec::circle()) ==
        doctest::Approx(closed).epsilon(1e-10));
  CHECK_THROWS(wiener_constant_quadrature(KernelSpec::riesz(1.5), CompactSetSpec::circle()));
  CHECK_THROWS(wiener_constant_quadrature(KernelSpec::riesz(0.5), CompactSetSpec::torus()));
}

TEST_CASE("wiener estimates approach the constants from below") {
  // circle + log: the minimizer reaches the equally spaced optimum, whose
  // value is exactly -log(N)/(N-1)
  const double circle_est = wiener_estimate(KernelSpec::log(), CompactSetSpec::circle(), 64);
  CHECK(circle_est == doctest::Approx(-std::log(64.0) / 63.0).epsilon(1e-9));

  // interval + log: bounded below by the exact optimum (Lobatto points)
  const double fekete =
      energy_of_points(KernelSpec::log(), oracles::lobatto_points(64)) / (64.0 * 63.0);
  const double iv_est = wiener_estimate(KernelSpec::log(), CompactSetSpec::interval(), 64);
  CHECK(iv_est >= fekete - 1e-9);
  CHECK(iv_est <= fekete + 0.01);

  // circle + s: equally spaced optimum again
  const double s_est = wiener_estimate(KernelSpec::riesz(0.5), CompactSetSpec::circle(), 64);
  const double s_opt = oracles::equally_spaced_circle_energy(KernelSpec::riesz(0.5), 64) /
                       (64.0 * 63.0);
  CHECK(s_est >= s_opt - 1e-9);
  CHECK(s_est <= s_opt + 0.01);

  CHECK_THROWS_AS(wiener_estimate(KernelSpec::riesz(1.0), CompactSetSpec::circle(), 16),
                  std::domain_error);
  CHECK_THROWS_AS(wiener_estimate(KernelSpec::riesz(2.0), CompactSetSpec::sphere2(), 16),
                  std::domain_error);
}

TEST_CASE("wiener estimates are nondecreasing in N") {
  double prev = -1e300;
  for (const int n : {32, 64, 128}) {
    const double est = wiener_estimate(KernelSpec::log(), CompactSetSpec::interval(), n);
    CHECK(est >= prev - 1e-6);
    prev = est;
  }
}
