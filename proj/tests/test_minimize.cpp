#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "rieszlab/diagnostics.hpp"
#include "rieszlab/minimize.hpp"

using namespace rieszlab;

namespace {

MinimizePlan make_plan(const CompactSetSpec& set, const KernelSpec& k, int n) {
  MinimizePlan plan;
  plan.set = set;
  plan.kernel = k;
  plan.n = n;
  return plan;
}

}  // namespace

TEST_CASE("two points on the circle become antipodal") {
  const MinimizeResult res =
      minimize_energy(make_plan(CompactSetSpec::circle(), KernelSpec::riesz(1.0), 2), 3);
  CHECK(res.energy == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(separation(res.config) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("three points on the circle: equilateral, checked by brute force") {
  // two-angle brute force pins the optimum at E = 6 / sqrt(3)
  const double brute = oracles::circle_three_point_min_energy(KernelSpec::riesz(1.0));
  CHECK(brute == doctest::Approx(6.0 / std::sqrt(3.0)).epsilon(1e-4));

  const MinimizeResult res =
      minimize_energy(make_plan(CompactSetSpec::circle(), KernelSpec::riesz(1.0), 3), 5);
  CHECK(separation(res.config) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-6));
  CHECK(res.energy == doctest::Approx(6.0 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(res.energy <= brute + 1e-6);
}

TEST_CASE("three log points on the interval reach the endpoints and center") {
  const MinimizeResult res =
      minimize_energy(make_plan(CompactSetSpec::interval(), KernelSpec::log(), 3), 11);
  std::vector<double> xs;
  for (const Point& p : res.config.points) xs.push_back(p[0]);
  std::sort(xs.begin(), xs.end());
  CHECK(xs[0] == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(std::abs(xs[1]) < 1e-6);
  CHECK(xs[2] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.config.provenance == Provenance::Minimized);
}

TEST_CASE("descend_step leaves a critical configuration unchanged") {
  Configuration tri;
  tri.set = CompactSetSpec::circle();
  for (int i = 0; i < 3; ++i) {
    const double t = 2 * oracles::kPi * i / 3;
    tri.points.push_back(Point(std::cos(t), std::sin(t)));
  }
  const auto stepped = descend_step(KernelSpec::riesz(1.0), tri.set, tri, 0.05);
  REQUIRE(stepped.has_value());
  for (std::size_t i = 0; i < 3; ++i) CHECK(dist(stepped->points[i], tri.points[i]) < 1e-10);
}

TEST_CASE("descend_step pushes nearby interval points apart and lowers energy") {
  Configuration two;
  two.set = CompactSetSpec::interval();
  two.points = {Point(0.1), Point(0.18)};
  const KernelSpec k = KernelSpec::riesz(1.0);
  const double e0 = total_energy(k, two);
  const auto stepped = descend_step(k, two.set, two, 1e-4);
  REQUIRE(stepped.has_value());
  CHECK(dist(stepped->points[0], stepped->points[1]) > 0.08);
  CHECK(total_energy(k, *stepped) < e0);
  CHECK_THROWS(descend_step(k, two.set, two, 0.0));
}

TEST_CASE("returned energy never exceeds the best initialization") {
  const MinimizeResult res =
      minimize_energy(make_plan(CompactSetSpec::sphere2(), KernelSpec::riesz(1.0), 24), 17);
  CHECK(res.energy <= res.diagnostics.best_init_energy);
  CHECK(res.diagnostics.restarts_run == 8);
  for (const Point& p : res.config.points)
    CHECK(membership_residual(res.config.set, p) < 1e-10);
}

TEST_CASE("multistart runs agree on small sphere problems") {
  for (const int n : {12, 16}) {
    const MinimizeResult a =
        minimize_energy(make_plan(CompactSetSpec::sphere2(), KernelSpec::riesz(1.0), n), 100);
    const MinimizeResult b =
        minimize_energy(make_plan(CompactSetSpec::sphere2(), KernelSpec::riesz(1.0), n), 200);
    CHECK(std::abs(a.energy - b.energy) / a.energy < 1e-4);
  }
}

TEST_CASE("equally spaced points are optimal on the circle") {
  // verified by multistart at small N, then the scaling consequence at N=512
  const KernelSpec k = KernelSpec::log();
  const MinimizeResult res = minimize_energy(make_plan(CompactSetSpec::circle(), k, 8), 23);
  CHECK(res.energy ==
        doctest::Approx(oracles::equally_spaced_circle_energy(k, 8)).epsilon(1e-9));

  MinimizePlan plan = make_plan(CompactSetSpec::circle(), k, 512);
  plan.restarts = 1;
  const MinimizeResult big = minimize_energy(plan, 29);
  const double dn = separation(big.config) * 512.0;
  CHECK(std::abs(dn - 2 * oracles::kPi) / (2 * oracles::kPi) < 0.05);
}

TEST_CASE("circle separation scales like 1/N for the log kernel") {
  std::vector<std::pair<double, double>> pairs;
  for (const int n : {32, 64, 128, 256}) {
    MinimizePlan plan = make_plan(CompactSetSpec::circle(), KernelSpec::log(), n);
    plan.restarts = 2;
    const MinimizeResult res = minimize_energy(plan, Rng::mix(31, n));
    pairs.emplace_back(n, separation(res.config));
  }
  const ExponentFit fit = fit_exponent(pairs);
  CHECK(fit.slope > -1.15);
  CHECK(fit.slope < -0.85);
}

TEST_CASE("boundary clamping keeps disk points feasible") {
  MinimizePlan plan = make_plan(CompactSetSpec::disk(), KernelSpec::riesz(1.0), 40);
  plan.restarts = 2;
  const MinimizeResult res = minimize_energy(plan, 37);
  std::size_t on_boundary = 0;
  for (const Point& p : res.config.points) {
    CHECK(norm(p) <= 1.0 + 1e-12);
    on_boundary += norm(p) > 1.0 - 1e-9;
  }
  // the equilibrium density diverges at the rim, so a fair share clamps there
  CHECK(on_boundary >= 10);
}

TEST_CASE("plan validation and defaults") {
  CHECK_THROWS(make_plan(CompactSetSpec::circle(), KernelSpec::riesz(1.0), 1).validate());
  const MinimizePlan small = make_plan(CompactSetSpec::sphere2(), KernelSpec::riesz(1.0), 32);
  CHECK(small.effective_restarts() == 8);
  const MinimizePlan big = make_plan(CompactSetSpec::sphere2(), KernelSpec::riesz(1.0), 256);
  CHECK(big.effective_restarts() == 3);
  CHECK(big.effective_grad_tol() ==
        doctest::Approx(1e-9 * std::pow(256.0, 1.5)));
  const MinimizePlan lg = make_plan(CompactSetSpec::circle(), KernelSpec::log(), 100);
  CHECK(lg.effective_grad_tol() == doctest::Approx(1e-7));
}
