#include "rieszlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rieszlab {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, b - a);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

std::pair<double, double> legendre_pd(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  if (n == 1) return {x, 1.0};
  double pm1 = 1.0, p = x;
  double dm1 = 0.0, d = 1.0;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p - (k - 1.0) * pm1) / k;
    const double dk = dm1 + (2.0 * k - 1.0) * p;
    pm1 = p;
    p = pk;
    dm1 = d;
    d = dk;
  }
  return {p, d};
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss rule needs n >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 64; ++it) {
      const auto [p, d] = legendre_pd(n, x);
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const auto [p, d] = legendre_pd(n, x);
    (void)p;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * d * d);
  }
  return rule;
}

double integrate_gauss(const GaussRule& rule, const std::function<double(double)>& f,
                       double a, double b) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

std::vector<double> legendre_derivative_roots(int n) {
  if (n < 2) return {};
  // P_n' has n-1 simple roots interlaced with the roots of P_n. Bracket by a
  // sign scan, then bisect; plenty at the N <= few hundred scale used here.
  const int grid = std::max(4096, 64 * n);
  std::vector<double> roots;
  auto dp = [n](double x) { return legendre_pd(n, x).second; };
  double x0 = -1.0 + 1e-12;
  double f0 = dp(x0);
  for (int i = 1; i <= grid; ++i) {
    const double x1 = -1.0 + 2.0 * static_cast<double>(i) / grid - 1e-12 * (i == grid);
    const double f1 = dp(x1);
    if (f0 == 0.0) roots.push_back(x0);
    if (f0 * f1 < 0.0) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = dp(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-16) break;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

}  // namespace rieszlab
