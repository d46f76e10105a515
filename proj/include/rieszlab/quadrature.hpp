#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace rieszlab {

/// Adaptive Simpson integration with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule, computed by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

/// Integrate f over [a, b] with a fixed Gauss rule.
double integrate_gauss(const GaussRule& rule, const std::function<double(double)>& f,
                       double a, double b);

/// (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre_pd(int n, double x);

/// Roots of P_n' in (-1, 1), ascending. Together with {-1, 1} these are the
/// minimizers of the discrete log-energy on [-1, 1] (Gauss-Lobatto nodes).
std::vector<double> legendre_derivative_roots(int n);

}  // namespace rieszlab
