#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rieszlab {

/// Ambient point in R^p with p <= 3. Coordinates beyond the ambient dimension
/// of the owning set stay exactly zero, so distance computations can always
/// run over all three components.
struct Point {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  Point() = default;
  explicit Point(double x) : c{x, 0.0, 0.0} {}
  Point(double x, double y) : c{x, y, 0.0} {}
  Point(double x, double y, double z) : c{x, y, z} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Point& operator+=(const Point& o) {
    c[0] += o.c[0];
    c[1] += o.c[1];
    c[2] += o.c[2];
    return *this;
  }
  Point& operator-=(const Point& o) {
    c[0] -= o.c[0];
    c[1] -= o.c[1];
    c[2] -= o.c[2];
    return *this;
  }
  Point& operator*=(double t) {
    c[0] *= t;
    c[1] *= t;
    c[2] *= t;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(double t, Point a) { return a *= t; }
  friend Point operator*(Point a, double t) { return a *= t; }

  friend double dot(const Point& a, const Point& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
  }
  friend double norm2(const Point& a) { return dot(a, a); }
  friend double norm(const Point& a);
  friend double dist2(const Point& a, const Point& b) {
    const double d0 = a.c[0] - b.c[0];
    const double d1 = a.c[1] - b.c[1];
    const double d2 = a.c[2] - b.c[2];
    return d0 * d0 + d1 * d1 + d2 * d2;
  }
  friend double dist(const Point& a, const Point& b);

  bool all_finite() const;
};

enum class SetKind { Interval, Circle, Sphere, Disk, Ball, Torus };

/// A supported compact set A in R^p together with its ambient and intrinsic
/// dimensions. Supported kinds:
///   Interval [a,b] in R^1, unit circle S^1 in R^2, unit sphere S^2 in R^3,
///   closed unit disk B^2, closed unit ball B^3, torus of revolution with
///   radii (major, minor) in R^3.
struct CompactSetSpec {
  SetKind kind = SetKind::Interval;
  int ambient_dim = 1;
  int intrinsic_dim = 1;
  double diameter = 2.0;
  bool has_boundary = true;

  // Interval bounds; only meaningful for SetKind::Interval.
  double a = -1.0;
  double b = 1.0;
  // Torus radii; only meaningful for SetKind::Torus.
  double major = 2.0;
  double minor = 1.0;

  static CompactSetSpec interval(double a = -1.0, double b = 1.0);
  static CompactSetSpec circle();
  static CompactSetSpec sphere2();
  static CompactSetSpec disk();
  static CompactSetSpec ball3();
  static CompactSetSpec torus(double major = 2.0, double minor = 1.0);

  /// Parse a set name as used by the CLI and config files: "interval",
  /// "interval:a:b", "circle", "sphere2", "disk", "ball3", "torus",
  /// "torus:R:r". Throws std::invalid_argument on unknown names.
  static CompactSetSpec from_name(const std::string& name);
  std::string name() const;
};

/// Euclidean projection onto A. Exact nearest point for every supported set.
/// The degenerate directions (center of a circle/sphere, axis and spine of the
/// torus) resolve to a fixed deterministic choice: the projection behaves as
/// if the input were perturbed by a fixed unit vector (+e1 for centers and the
/// torus axis, +e3 for the torus spine).
Point project(const CompactSetSpec& set, const Point& x);

/// dist(x, A), computed via the projection.
double membership_residual(const CompactSetSpec& set, const Point& x);

/// n i.i.d. points, uniform with respect to the natural arclength / surface /
/// volume measure of the set. Deterministic given the seed.
std::vector<Point> sample(const CompactSetSpec& set, std::size_t n, std::uint64_t seed);

/// Orthonormal tangent basis at x on A. Sets with boundary (interval, disk,
/// ball) return the full ambient basis; manifolds return intrinsic_dim
/// vectors orthogonal to the normal at x.
std::vector<Point> tangent_basis(const CompactSetSpec& set, const Point& x);

/// Component of v tangential to A at x (identity for sets with boundary).
Point tangential_component(const CompactSetSpec& set, const Point& x, const Point& v);

/// The gradient direction actually usable for descent at x: tangential part
/// for manifolds; for sets with boundary, drops the outward normal component
/// when the descent direction -g would leave the set (active clamp). Zero at
/// constrained stationary points.
Point effective_descent_gradient(const CompactSetSpec& set, const Point& x, const Point& g);

/// Fixed, documented starting point used by greedy runs: right endpoint for
/// the interval, (1,0,...) for circle/sphere/disk/ball, the outer equator
/// point (major+minor, 0, 0) for the torus.
Point canonical_first_point(const CompactSetSpec& set);

}  // namespace rieszlab
