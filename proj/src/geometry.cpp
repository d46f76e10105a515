#include "rieszlab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rieszlab/rng.hpp"

namespace rieszlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDegenerate = 1e-14;
}  // namespace

double norm(const Point& a) { return std::sqrt(norm2(a)); }
double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

bool Point::all_finite() const {
  return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]);
}

CompactSetSpec CompactSetSpec::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval requires a < b");
  CompactSetSpec s;
  s.kind = SetKind::Interval;
  s.ambient_dim = 1;
  s.intrinsic_dim = 1;
  s.diameter = b - a;
  s.has_boundary = true;
  s.a = a;
  s.b = b;
  return s;
}

CompactSetSpec CompactSetSpec::circle() {
  CompactSetSpec s;
  s.kind = SetKind::Circle;
  s.ambient_dim = 2;
  s.intrinsic_dim = 1;
  s.diameter = 2.0;
  s.has_boundary = false;
  return s;
}

CompactSetSpec CompactSetSpec::sphere2() {
  CompactSetSpec s;
  s.kind = SetKind::Sphere;
  s.ambient_dim = 3;
  s.intrinsic_dim = 2;
  s.diameter = 2.0;
  s.has_boundary = false;
  return s;
}

CompactSetSpec CompactSetSpec::disk() {
  CompactSetSpec s;
  s.kind = SetKind::Disk;
  s.ambient_dim = 2;
  s.intrinsic_dim = 2;
  s.diameter = 2.0;
  s.has_boundary = true;
  return s;
}

CompactSetSpec CompactSetSpec::ball3() {
  CompactSetSpec s;
  s.kind = SetKind::Ball;
  s.ambient_dim = 3;
  s.intrinsic_dim = 3;
  s.diameter = 2.0;
  s.has_boundary = true;
  return s;
}

CompactSetSpec CompactSetSpec::torus(double major, double minor) {
  if (!(major > minor && minor > 0.0))
    throw std::invalid_argument("torus requires major > minor > 0");
  CompactSetSpec s;
  s.kind = SetKind::Torus;
  s.ambient_dim = 3;
  s.intrinsic_dim = 2;
  s.diameter = 2.0 * (major + minor);
  s.has_boundary = false;
  s.major = major;
  s.minor = minor;
  return s;
}

CompactSetSpec CompactSetSpec::from_name(const std::string& name) {
  std::string head = name;
  std::vector<double> params;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    head = name.substr(0, pos);
    std::stringstream ss(name.substr(pos + 1));
    std::string tok;
    while (std::getline(ss, tok, ':')) params.push_back(std::stod(tok));
  }
  if (head == "interval") {
    if (params.empty()) return interval();
    if (params.size() == 2) return interval(params[0], params[1]);
  } else if (head == "circle" || head == "circle1" || head == "sphere1") {
    if (params.empty()) return circle();
  } else if (head == "sphere" || head == "sphere2") {
    if (params.empty()) return sphere2();
  } else if (head == "disk" || head == "ball2") {
    if (params.empty()) return disk();
  } else if (head == "ball" || head == "ball3") {
    if (params.empty()) return ball3();
  } else if (head == "torus") {
    if (params.empty()) return torus();
    if (params.size() == 2) return torus(params[0], params[1]);
  }
  throw std::invalid_argument("unknown set name: " + name);
}

std::string CompactSetSpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case SetKind::Interval:
      if (a == -1.0 && b == 1.0) return "interval";
      os << "interval:" << a << ":" << b;
      return os.str();
    case SetKind::Circle:
      return "circle";
    case SetKind::Sphere:
      return "sphere2";
    case SetKind::Disk:
      return "disk";
    case SetKind::Ball:
      return "ball3";
    case SetKind::Torus:
      if (major == 2.0 && minor == 1.0) return "torus";
      os << "torus:" << major << ":" << minor;
      return os.str();
  }
  return "?";
}

Point project(const CompactSetSpec& set, const Point& x) {
  switch (set.kind) {
    case SetKind::Interval: {
      double v = x[0];
      if (v < set.a) v = set.a;
      if (v > set.b) v = set.b;
      return Point(v);
    }
    case SetKind::Circle: {
      const double n = std::hypot(x[0], x[1]);
      if (n < kDegenerate) return Point(1.0, 0.0);
      return Point(x[0] / n, x[1] / n);
    }
    case SetKind::Sphere: {
      const double n = norm(x);
      if (n < kDegenerate) return Point(1.0, 0.0, 0.0);
      return Point(x[0] / n, x[1] / n, x[2] / n);
    }
    case SetKind::Disk: {
      const double n = std::hypot(x[0], x[1]);
      if (n <= 1.0) return Point(x[0], x[1]);
      return Point(x[0] / n, x[1] / n);
    }
    case SetKind::Ball: {
      const double n = norm(x);
      if (n <= 1.0) return x;
      return Point(x[0] / n, x[1] / n, x[2] / n);
    }
    case SetKind::Torus: {
      const double R = set.major, r = set.minor;
      const double rho = std::hypot(x[0], x[1]);
      double u0 = 1.0, u1 = 0.0;
      if (rho >= kDegenerate) {
        u0 = x[0] / rho;
        u1 = x[1] / rho;
      }
      const Point ring(R * u0, R * u1, 0.0);
      Point v = x - ring;
      const double vn = norm(v);
      if (vn < kDegenerate) v = Point(0.0, 0.0, 1.0);  // spine degeneracy
      else v *= 1.0 / vn;
      return ring + r * v;
    }
  }
  throw std::logic_error("unreachable");
}

double membership_residual(const CompactSetSpec& set, const Point& x) {
  return dist(x, project(set, x));
}

namespace {

Point sample_one(const CompactSetSpec& set, Rng& rng) {
  switch (set.kind) {
    case SetKind::Interval:
      return Point(rng.uniform(set.a, set.b));
    case SetKind::Circle: {
      const double t = rng.uniform(0.0, 2.0 * kPi);
      return Point(std::cos(t), std::sin(t));
    }
    case SetKind::Sphere: {
      while (true) {
        const Point g(rng.normal(), rng.normal(), rng.normal());
        const double n = norm(g);
        if (n > 1e-8) return Point(g[0] / n, g[1] / n, g[2] / n);
      }
    }
    case SetKind::Disk: {
      const double r = std::sqrt(rng.uniform());
      const double t = rng.uniform(0.0, 2.0 * kPi);
      return Point(r * std::cos(t), r * std::sin(t));
    }
    case SetKind::Ball: {
      const double r = std::cbrt(rng.uniform());
      while (true) {
        const Point g(rng.normal(), rng.normal(), rng.normal());
        const double n = norm(g);
        if (n > 1e-8) return Point(r * g[0] / n, r * g[1] / n, r * g[2] / n);
      }
    }
    case SetKind::Torus: {
      const double R = set.major, r = set.minor;
      const double u = rng.uniform(0.0, 2.0 * kPi);
      // Area element is r(R + r cos v) du dv; accept v with probability
      // proportional to R + r cos v.
      double v = 0.0;
      while (true) {
        v = rng.uniform(0.0, 2.0 * kPi);
        if (rng.uniform() * (R + r) <= R + r * std::cos(v)) break;
      }
      const double w = R + r * std::cos(v);
      return Point(w * std::cos(u), w * std::sin(u), r * std::sin(v));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<Point> sample(const CompactSetSpec& set, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_one(set, rng));
  return out;
}

std::vector<Point> tangent_basis(const CompactSetSpec& set, const Point& x) {
  switch (set.kind) {
    case SetKind::Interval:
      return {Point(1.0)};
    case SetKind::Disk:
      return {Point(1.0, 0.0), Point(0.0, 1.0)};
    case SetKind::Ball:
      return {Point(1.0, 0.0, 0.0), Point(0.0, 1.0, 0.0), Point(0.0, 0.0, 1.0)};
    case SetKind::Circle:
      return {Point(-x[1], x[0])};
    case SetKind::Sphere: {
      // Pick the coordinate axis most orthogonal to the normal, then complete
      // the frame by cross products.
      const double ax = std::fabs(x[0]), ay = std::fabs(x[1]), az = std::fabs(x[2]);
      Point t1;
      if (ax <= ay && ax <= az) {
        const double d = std::hypot(x[1], x[2]);
        t1 = Point(0.0, -x[2] / d, x[1] / d);
      } else if (ay <= az) {
        const double d = std::hypot(x[0], x[2]);
        t1 = Point(-x[2] / d, 0.0, x[0] / d);
      } else {
        const double d = std::hypot(x[0], x[1]);
        t1 = Point(x[1] / d, -x[0] / d, 0.0);
      }
      const Point t2(x[1] * t1[2] - x[2] * t1[1], x[2] * t1[0] - x[0] * t1[2],
                     x[0] * t1[1] - x[1] * t1[0]);
      return {t1, t2};
    }
    case SetKind::Torus: {
      const double R = set.major, r = set.minor;
      const double rho = std::hypot(x[0], x[1]);
      const double u0 = x[0] / rho, u1 = x[1] / rho;
      const double cv = (rho - R) / r, sv = x[2] / r;
      return {Point(-u1, u0, 0.0), Point(-u0 * sv, -u1 * sv, cv)};
    }
  }
  throw std::logic_error("unreachable");
}

Point tangential_component(const CompactSetSpec& set, const Point& x, const Point& v) {
  switch (set.kind) {
    case SetKind::Interval:
    case SetKind::Disk:
    case SetKind::Ball:
      return v;
    case SetKind::Circle:
    case SetKind::Sphere: {
      // x is on the unit circle/sphere, so x itself is the unit normal.
      return v - dot(v, x) * x;
    }
    case SetKind::Torus: {
      const auto basis = tangent_basis(set, x);
      Point out;
      for (const Point& t : basis) out += dot(v, t) * t;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Point effective_descent_gradient(const CompactSetSpec& set, const Point& x, const Point& g) {
  constexpr double kBoundaryTol = 1e-12;
  switch (set.kind) {
    case SetKind::Circle:
    case SetKind::Sphere:
    case SetKind::Torus:
      return tangential_component(set, x, g);
    case SetKind::Interval: {
      // At an endpoint, the descent direction -g must stay inside [a, b].
      if (x[0] <= set.a + kBoundaryTol && g[0] > 0.0) return Point(0.0);
      if (x[0] >= set.b - kBoundaryTol && g[0] < 0.0) return Point(0.0);
      return g;
    }
    case SetKind::Disk:
    case SetKind::Ball: {
      const double n = norm(x);
      if (n < 1.0 - kBoundaryTol) return g;
      const Point nhat = (1.0 / n) * x;
      const double gn = dot(g, nhat);
      // Descent -g with negative normal component moves inward: feasible.
      if (gn >= 0.0) return g;
      return g - gn * nhat;
    }
  }
  throw std::logic_error("unreachable");
}

Point canonical_first_point(const CompactSetSpec& set) {
  switch (set.kind) {
    case SetKind::Interval:
      return Point(set.b);
    case SetKind::Circle:
    case SetKind::Disk:
      return Point(1.0, 0.0);
    case SetKind::Sphere:
    case SetKind::Ball:
      return Point(1.0, 0.0, 0.0);
    case SetKind::Torus:
      return Point(set.major + set.minor, 0.0, 0.0);
  }
  throw std::logic_error("unreachable");
}

}  // namespace rieszlab
