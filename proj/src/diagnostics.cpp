#include "rieszlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "rieszlab/energy.hpp"
#include "rieszlab/parallel.hpp"
#include "rieszlab/rng.hpp"

namespace rieszlab {

double separation_naive(const Configuration& omega) {
  const auto& p = omega.points;
  if (p.size() < 2) throw std::invalid_argument("separation needs N >= 2");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) best = std::min(best, dist2(p[i], p[j]));
  return std::sqrt(best);
}

namespace {

struct CellKey {
  long long x = 0, y = 0, z = 0;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.x) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::size_t>(k.y) * 0xc2b2ae3d27d4eb4full + (h << 6);
    h ^= static_cast<std::size_t>(k.z) * 0x165667b19e3779f9ull + (h >> 3);
    return h;
  }
};

}  // namespace

double separation(const Configuration& omega) {
  const auto& p = omega.points;
  const std::size_t n = p.size();
  if (n < 2) throw std::invalid_argument("separation needs N >= 2");
  if (n <= 64) return separation_naive(omega);

  const double d = static_cast<double>(omega.set.intrinsic_dim);
  double h = omega.set.diameter * std::pow(static_cast<double>(n), -1.0 / d);

  // A pair at distance <= h always lands in adjacent cells of edge h, so a
  // best distance <= h found this way is exact; otherwise grow h and repeat.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> grid;
    grid.reserve(n * 2);
    auto key_of = [&](const Point& q) {
      return CellKey{static_cast<long long>(std::floor(q[0] / h)),
                     static_cast<long long>(std::floor(q[1] / h)),
                     static_cast<long long>(std::floor(q[2] / h))};
    };
    for (std::size_t i = 0; i < n; ++i) grid[key_of(p[i])].push_back(i);

    double best2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const CellKey c = key_of(p[i]);
      for (long long dx = -1; dx <= 1; ++dx)
        for (long long dy = -1; dy <= 1; ++dy)
          for (long long dz = -1; dz <= 1; ++dz) {
            const auto it = grid.find(CellKey{c.x + dx, c.y + dy, c.z + dz});
            if (it == grid.end()) continue;
            for (const std::size_t j : it->second)
              if (j > i) best2 = std::min(best2, dist2(p[i], p[j]));
          }
    }
    if (best2 <= h * h) return std::sqrt(best2);
    h *= 2.0;
  }
  return separation_naive(omega);
}

double separation_restricted(const Configuration& omega,
                             const std::function<bool(const Point&)>& in_core) {
  const auto& p = omega.points;
  if (p.size() < 2) throw std::invalid_argument("separation needs N >= 2");
  std::vector<char> core(p.size());
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    core[i] = in_core(p[i]) ? 1 : 0;
    any = any || core[i];
  }
  if (!any) throw std::invalid_argument("no configuration point lies in the core");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (core[i] || core[j]) best = std::min(best, dist2(p[i], p[j]));
  return std::sqrt(best);
}

namespace {

double nearest_dist(const std::vector<Point>& pts, const Point& y) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& x : pts) best = std::min(best, dist2(x, y));
  return std::sqrt(best);
}

std::size_t nearest_index(const std::vector<Point>& pts, const Point& y) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d2 = dist2(pts[i], y);
    if (d2 < best) {
      best = d2;
      bi = i;
    }
  }
  return bi;
}

}  // namespace

CoveringResult covering_radius(const Configuration& omega, std::size_t probe_budget,
                               std::uint64_t seed, int ascent_steps) {
  if (probe_budget < 1000) throw std::invalid_argument("covering needs probe_budget >= 1000");
  return covering_radius_with_probes(omega, sample(omega.set, probe_budget, seed),
                                     ascent_steps);
}

CoveringResult covering_radius_with_probes(const Configuration& omega,
                                           const std::vector<Point>& probes,
                                           int ascent_steps) {
  if (probes.empty()) throw std::invalid_argument("covering needs probes");
  constexpr std::size_t kProbeBlock = 2048;
  const std::size_t n_blocks = (probes.size() + kProbeBlock - 1) / kProbeBlock;
  std::vector<std::pair<double, std::size_t>> block_best(n_blocks, {-1.0, 0});
  parallel_blocks(n_blocks, [&](std::size_t b) {
    const std::size_t lo = b * kProbeBlock;
    const std::size_t hi = std::min(lo + kProbeBlock, probes.size());
    double best = -1.0;
    std::size_t bi = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      const double d = nearest_dist(omega.points, probes[i]);
      if (d > best) {
        best = d;
        bi = i;
      }
    }
    block_best[b] = {best, bi};
  });

  double raw = -1.0;
  std::size_t raw_i = 0;
  for (const auto& [v, i] : block_best)
    if (v > raw) {
      raw = v;
      raw_i = i;
    }

  // Local ascent of the distance-to-nearest function from the best probe:
  // move away from the current nearest configuration point along the set.
  Point y = probes[raw_i];
  double val = raw;
  double step = 0.5 * raw;
  for (int it = 0; it < ascent_steps && step > 1e-15 * omega.set.diameter; ++it) {
    const Point xn = omega.points[nearest_index(omega.points, y)];
    Point dir = y - xn;
    const double dn = norm(dir);
    if (dn == 0.0) break;
    dir *= 1.0 / dn;
    const Point dir_t = tangential_component(omega.set, y, dir);
    bool accepted = false;
    for (int bt = 0; bt < 16; ++bt) {
      const Point cand = project(omega.set, y + step * dir_t);
      const double dc = nearest_dist(omega.points, cand);
      if (dc > val) {
        y = cand;
        val = dc;
        step *= 1.25;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return {raw, std::max(raw, val)};
}

namespace {

ExponentFit loglog_fit(const std::vector<std::pair<double, double>>& pairs) {
  const std::size_t m = pairs.size();
  double sx = 0, sy = 0;
  for (const auto& [n, v] : pairs) {
    sx += std::log(n);
    sy += std::log(v);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [n, v] : pairs) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(v) - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_exponent needs distinct N values");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (const auto& [n, v] : pairs) {
    const double r = std::log(v) - (fit.intercept + fit.slope * std::log(n));
    ssr += r * r;
  }
  fit.residual_rms = std::sqrt(ssr / m);
  fit.stderr_slope = m > 2 ? std::sqrt(ssr / (m - 2) / sxx) : 0.0;
  return fit;
}

}  // namespace

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 4) throw std::invalid_argument("fit_exponent needs >= 4 pairs");
  for (const auto& [n, v] : pairs)
    if (!(n > 0.0) || !(v > 0.0))
      throw std::invalid_argument("fit_exponent needs positive values");
  return loglog_fit(pairs);
}

std::vector<double> geometric_radii(double r_max, int levels) {
  std::vector<double> out;
  for (int k = levels - 1; k >= 0; --k) out.push_back(r_max * std::pow(2.0, -k));
  return out;  // ascending
}

RegularityResult empirical_regularity(const Configuration& omega, const Point& x,
                                      const std::vector<double>& radii) {
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw std::invalid_argument("radii must be strictly increasing");
  const double n = static_cast<double>(omega.points.size());
  RegularityResult res;
  std::vector<std::pair<double, double>> pairs;
  for (const double r : radii) {
    std::size_t count = 0;
    const double r2 = r * r;
    for (const Point& p : omega.points)
      if (dist2(p, x) < r2) ++count;
    if (count >= 5) {
      res.radii.push_back(r);
      res.counts.push_back(static_cast<double>(count) / n);
      pairs.emplace_back(r, static_cast<double>(count) / n);
    }
  }
  if (pairs.size() < 3)
    throw std::invalid_argument("insufficient resolution: fewer than 3 usable radii");
  res.slope = loglog_fit(pairs).slope;
  return res;
}

GreedyFloor greedy_separation_floor(const Configuration& omega, int d, int j_min) {
  if (omega.provenance != Provenance::Greedy)
    throw std::invalid_argument("greedy_separation_floor needs a greedy-ordered configuration");
  if (j_min < 8) throw std::invalid_argument("greedy_separation_floor needs j_min >= 8");
  const auto& p = omega.points;
  const int n = static_cast<int>(p.size());
  if (j_min > n) throw std::invalid_argument("j_min exceeds configuration size");

  GreedyFloor out;
  for (int j = j_min - 1; j < n; ++j) {  // point index j has j predecessors
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < j; ++i) best = std::min(best, dist2(p[i], p[j]));
    const double md = std::sqrt(best);
    const double m = md * std::pow(static_cast<double>(j + 1), 1.0 / d);
    out.j_values.push_back(j + 1);
    out.min_dist_series.push_back(md);
    out.m_series.push_back(m);
  }
  std::vector<double> sorted = out.m_series;
  std::sort(sorted.begin(), sorted.end());
  out.min_m = sorted.front();
  out.median_m = sorted[sorted.size() / 2];
  return out;
}

}  // namespace rieszlab
