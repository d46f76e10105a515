#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "rieszlab/energy.hpp"
#include "rieszlab/rng.hpp"
#include "rieszlab/summation.hpp"

using namespace rieszlab;

namespace {

Configuration on_set(const CompactSetSpec& set, std::vector<Point> pts) {
  Configuration c;
  c.set = set;
  c.points = std::move(pts);
  return c;
}

}  // namespace

TEST_CASE("pair interaction values") {
  CHECK(pair_interaction(KernelSpec::riesz(1.0), 0.5) == doctest::Approx(2.0));
  CHECK(pair_interaction(KernelSpec::log(), 1.0) == doctest::Approx(0.0));
  CHECK(pair_interaction(KernelSpec::riesz(2.0), 0.1) == doctest::Approx(100.0));
  CHECK_THROWS_AS(pair_interaction(KernelSpec::riesz(1.0), 0.0), std::domain_error);
  CHECK_THROWS_AS(pair_interaction(KernelSpec::log(), -1.0), std::domain_error);
  CHECK_THROWS(KernelSpec::riesz(0.0));
}

TEST_CASE("fast kernel paths match pow") {
  for (const double s : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 0.77, 3.3}) {
    const KernelSpec k = KernelSpec::riesz(s);
    for (const double r2 : {1e-6, 0.04, 0.5, 1.0, 3.7, 25.0}) {
      CHECK(k.eval_r2(r2) == doctest::Approx(std::pow(r2, -0.5 * s)).epsilon(1e-13));
      CHECK(k.grad_coef_r2(r2) ==
            doctest::Approx(-2.0 * s * std::pow(r2, -0.5 * (s + 2.0))).epsilon(1e-13));
    }
  }
}

TEST_CASE("total energy on small exact configurations") {
  const CompactSetSpec iv = CompactSetSpec::interval();
  // two points at distance 1, s = 2 -> two ordered pairs
  CHECK(total_energy(KernelSpec::riesz(2.0), on_set(iv, {Point(0.0), Point(1.0)})) ==
        doctest::Approx(2.0));
  // pairwise-unit triangle, s = 1
  const double h = std::sqrt(3.0) / 2.0;
  const Configuration tri =
      on_set(CompactSetSpec::disk(),
             {Point(0.0, 0.0), Point(1.0, 0.0), Point(0.5, h)});
  CHECK(total_energy(KernelSpec::riesz(1.0), tri) == doctest::Approx(6.0));
  // log energy of {-1, 0, 1}: pair distances {1, 1, 2}
  const Configuration fek = on_set(iv, {Point(-1.0), Point(0.0), Point(1.0)});
  CHECK(total_energy(KernelSpec::log(), fek) ==
        doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-12));
  // coincident points are a domain error
  CHECK_THROWS_AS(total_energy(KernelSpec::riesz(1.0),
                               on_set(iv, {Point(0.25), Point(0.25)})),
                  std::domain_error);
}

TEST_CASE("potential sums and the occupied sentinel") {
  const KernelSpec s1 = KernelSpec::riesz(1.0);
  const Configuration one = on_set(CompactSetSpec::circle(), {Point(1, 0)});
  CHECK(potential_sum(s1, one, Point(-1, 0)) == doctest::Approx(0.5));

  const Configuration zero = on_set(CompactSetSpec::interval(), {Point(0.0)});
  CHECK(potential_sum(KernelSpec::log(), zero, Point(1.0)) == doctest::Approx(0.0));

  const Configuration pair = on_set(CompactSetSpec::circle(), {Point(1, 0), Point(-1, 0)});
  CHECK(potential_sum(s1, pair, Point(0, 1)) == doctest::Approx(std::sqrt(2.0)));

  CHECK(std::isinf(potential_sum(s1, pair, Point(1, 0))));
}

TEST_CASE("polarization scan with refinement") {
  const KernelSpec s1 = KernelSpec::riesz(1.0);
  const CompactSetSpec circle = CompactSetSpec::circle();

  // single point: the antipode minimizes
  const Configuration one = on_set(circle, {Point(1, 0)});
  const auto res = polarization_min(s1, one, sample(circle, 4096, 3), true);
  CHECK(dist(res.point, Point(-1, 0)) < 1e-6);
  CHECK(res.value == doctest::Approx(0.5).epsilon(1e-9));

  // equally spaced: all arc midpoints carry the same value
  const int n = 12;
  std::vector<Point> pts, mids;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * oracles::kPi * i / n;
    pts.push_back(Point(std::cos(t), std::sin(t)));
    const double m = t + oracles::kPi / n;
    mids.push_back(Point(std::cos(m), std::sin(m)));
  }
  const Configuration even = on_set(circle, pts);
  std::vector<double> mid_vals;
  for (const Point& m : mids) mid_vals.push_back(potential_sum(s1, even, m));
  const auto [lo, hi] = std::minmax_element(mid_vals.begin(), mid_vals.end());
  CHECK(*hi - *lo < 1e-9);
  const auto pol = polarization_min(s1, even, mids, true);
  CHECK(pol.value <= *lo + 1e-12);

  // interval pair: brute-force grid oracle says y* = 0, value 2
  const Configuration ends = on_set(CompactSetSpec::interval(), {Point(-1.0), Point(1.0)});
  const auto [oy, ov] = oracles::interval_polarization_grid(s1, {-1.0, 1.0});
  CHECK(std::abs(oy) < 1e-4);
  CHECK(ov == doctest::Approx(2.0).epsilon(1e-8));
  const auto ires = polarization_min(s1, ends, sample(CompactSetSpec::interval(), 4096, 5), true);
  CHECK(std::abs(ires.point[0]) < 1e-6);
  CHECK(ires.value == doctest::Approx(2.0).epsilon(1e-10));

  // every candidate occupied -> error
  CHECK_THROWS_AS(polarization_min(s1, ends, {Point(-1.0), Point(1.0)}, false),
                  std::domain_error);
}

TEST_CASE("polarization ties break toward the lowest candidate index") {
  const KernelSpec s1 = KernelSpec::riesz(1.0);
  const Configuration one = on_set(CompactSetSpec::circle(), {Point(1, 0)});
  // two exactly symmetric candidates share the value; index 0 must win
  const std::vector<Point> cands = {Point(0, 1), Point(0, -1), Point(-1, 0)};
  const auto res = polarization_min(s1, one, {cands[0], cands[1]}, false);
  CHECK(res.candidate_index == 0);
}

TEST_CASE("gradient formulas and symmetry") {
  const KernelSpec s1 = KernelSpec::riesz(1.0);
  // antipodal pair on the circle: gradients are purely radial
  {
    const std::vector<Point> pts = {Point(1, 0), Point(-1, 0)};
    for (const double s : {0.5, 1.0, 2.0}) {
      const auto g = energy_gradient(KernelSpec::riesz(s), pts);
      CHECK(std::abs(g[0][1]) < 1e-12);
      CHECK(std::abs(g[1][1]) < 1e-12);
    }
  }
  // interval pair {0, 0.5}, s = 1: dE/dx at 0.5 is -2*(0.5)/0.5^3 = -8
  {
    const std::vector<Point> pts = {Point(0.0), Point(0.5)};
    const auto g = energy_gradient(s1, pts);
    CHECK(g[1][0] == doctest::Approx(-8.0).epsilon(1e-12));
    const auto g_fd = energy_gradient_fd(s1, pts);
    CHECK(g_fd[1][0] == doctest::Approx(-8.0).epsilon(1e-6));
  }
  // equilateral triangle on the circle: tangential components vanish
  {
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) {
      const double t = 2 * oracles::kPi * i / 3;
      pts.push_back(Point(std::cos(t), std::sin(t)));
    }
    const auto g = energy_gradient(s1, pts);
    for (std::size_t i = 0; i < 3; ++i) {
      const Point tangent(-pts[i][1], pts[i][0]);
      CHECK(std::abs(dot(g[i], tangent)) < 1e-10);
    }
  }
}

TEST_CASE("gradient agrees with central finite differences") {
  const std::vector<CompactSetSpec> sets = {
      CompactSetSpec::interval(), CompactSetSpec::circle(), CompactSetSpec::sphere2(),
      CompactSetSpec::disk(),     CompactSetSpec::ball3(),  CompactSetSpec::torus()};
  const std::vector<KernelSpec> kernels = {KernelSpec::riesz(0.5), KernelSpec::riesz(1.0),
                                           KernelSpec::riesz(1.5), KernelSpec::riesz(2.5),
                                           KernelSpec::log()};
  for (const auto& set : sets) {
    for (int c = 0; c < 20; ++c) {
      std::vector<Point> pts;
      for (int attempt = 0; attempt < 50; ++attempt) {
        pts = sample(set, 8, Rng::mix(500 + c, attempt));
        double dmin = 1e300;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j)
            dmin = std::min(dmin, dist(pts[i], pts[j]));
        if (dmin > 0.05 * set.diameter) break;
      }
      const KernelSpec& k = kernels[c % kernels.size()];
      const auto g = energy_gradient(k, pts);
      const auto g_fd = energy_gradient_fd(k, pts);
      double gmax = 0.0, emax = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        gmax = std::max(gmax, norm(g[i]));
        emax = std::max(emax, dist(g[i], g_fd[i]));
      }
      REQUIRE(emax / std::max(1.0, gmax) < 1e-5);
    }
  }
}

TEST_CASE("energy is invariant under permutation and isometry") {
  const KernelSpec k = KernelSpec::riesz(1.0);
  std::vector<Point> pts = sample(CompactSetSpec::sphere2(), 1024, 13);
  const double e0 = energy_of_points(k, pts);

  std::vector<Point> shuffled = pts;
  Rng rng(99);
  for (std::size_t i = shuffled.size() - 1; i > 0; --i)
    std::swap(shuffled[i], shuffled[rng.next_u64() % (i + 1)]);
  CHECK(std::abs(energy_of_points(k, shuffled) - e0) / e0 < 1e-9);

  const auto rotated = oracles::rotate_all_3d(pts, 4);
  CHECK(std::abs(energy_of_points(k, rotated) - e0) / e0 < 1e-9);
}

TEST_CASE("energy equals the potential-sum identity") {
  const KernelSpec k = KernelSpec::riesz(1.5);
  const auto pts = sample(CompactSetSpec::sphere2(), 64, 21);
  const double e = energy_of_points(k, pts);
  CompensatedSum acc;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    std::vector<Point> rest;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (i != j) rest.push_back(pts[i]);
    acc.add(potential_sum(k, rest, pts[j]));
  }
  CHECK(std::abs(acc.value() - e) / e < 1e-10);
}

TEST_CASE("energy grows with s when all distances are below one") {
  std::vector<Point> pts;
  Rng rng(3);
  for (int i = 0; i < 12; ++i) pts.push_back(Point(rng.uniform(-0.4, 0.4)));
  const double e_half = energy_of_points(KernelSpec::riesz(0.5), pts);
  const double e_one = energy_of_points(KernelSpec::riesz(1.0), pts);
  const double e_two = energy_of_points(KernelSpec::riesz(2.0), pts);
  CHECK(e_half < e_one);
  CHECK(e_one < e_two);
}

TEST_CASE("blocked summation is independent of the execution order") {
  // Reference: serial Neumaier over the same fixed blocks the parallel path
  // uses; the results must agree bit for bit.
  const KernelSpec k = KernelSpec::riesz(1.5);
  const auto pts = sample(CompactSetSpec::sphere2(), 1500, 8);
  const double e = energy_of_points(k, pts);

  const std::size_t block = 64;
  const std::size_t n = pts.size();
  CompensatedSum total;
  for (std::size_t lo = 0; lo < n; lo += block) {
    CompensatedSum acc;
    for (std::size_t i = lo; i < std::min(lo + block, n); ++i)
      for (std::size_t j = i + 1; j < n; ++j) acc.add(k.eval_r2(dist2(pts[i], pts[j])));
    total.add(acc.value());
  }
  CHECK(e == 2.0 * total.value());
}
