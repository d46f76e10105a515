#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rieszlab/diagnostics.hpp"
#include "rieszlab/energy.hpp"
#include "rieszlab/equilibrium.hpp"
#include "rieszlab/experiments.hpp"
#include "rieszlab/greedy.hpp"
#include "rieszlab/minimize.hpp"

namespace py = pybind11;
using namespace rieszlab;

namespace {

using Rows = std::vector<std::vector<double>>;

Point point_from(const std::vector<double>& v) {
  Point p;
  for (std::size_t d = 0; d < v.size() && d < 3; ++d) p[static_cast<int>(d)] = v[d];
  return p;
}

Rows rows_from(const std::vector<Point>& pts, int dim) {
  Rows out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    std::vector<double> row(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) row[static_cast<std::size_t>(d)] = p[d];
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Point> points_from(const Rows& rows) {
  std::vector<Point> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(point_from(r));
  return out;
}

KernelSpec kernel_from(const py::object& k) {
  if (py::isinstance<py::str>(k)) return KernelSpec::from_name(k.cast<std::string>());
  return KernelSpec::riesz(k.cast<double>());
}

Configuration config_from(const std::string& set_name, const Rows& rows) {
  Configuration c;
  c.set = CompactSetSpec::from_name(set_name);
  c.points = points_from(rows);
  return c;
}

}  // namespace

PYBIND11_MODULE(_rieszlab, m) {
  m.doc() = "Riesz energy laboratory: greedy/minimal configurations and diagnostics";

  m.def(
      "sample",
      [](const std::string& set, std::size_t n, std::uint64_t seed) {
        const CompactSetSpec s = CompactSetSpec::from_name(set);
        return rows_from(sample(s, n, seed), s.ambient_dim);
      },
      py::arg("set"), py::arg("n"), py::arg("seed") = 1,
      "Uniform points on the set (natural measure).");

  m.def(
      "project",
      [](const std::string& set, const std::vector<double>& x) {
        const CompactSetSpec s = CompactSetSpec::from_name(set);
        const Point p = project(s, point_from(x));
        std::vector<double> out(static_cast<std::size_t>(s.ambient_dim));
        for (int d = 0; d < s.ambient_dim; ++d) out[static_cast<std::size_t>(d)] = p[d];
        return out;
      },
      py::arg("set"), py::arg("x"), "Euclidean projection onto the set.");

  m.def(
      "total_energy",
      [](const std::string& set, const py::object& kernel, const Rows& points) {
        Configuration c = config_from(set, points);
        return total_energy(kernel_from(kernel), c);
      },
      py::arg("set"), py::arg("kernel"), py::arg("points"),
      "Discrete energy over ordered pairs (kernel: exponent or 'log').");

  m.def(
      "potential",
      [](const std::string& set, const py::object& kernel, const Rows& points,
         const std::vector<double>& y) {
        Configuration c = config_from(set, points);
        return potential_sum(kernel_from(kernel), c, point_from(y));
      },
      py::arg("set"), py::arg("kernel"), py::arg("points"), py::arg("y"));

  m.def(
      "greedy",
      [](const std::string& set, const py::object& kernel, int n, std::uint64_t seed,
         int budget) {
        GreedyPlan plan;
        plan.set = CompactSetSpec::from_name(set);
        plan.kernel = kernel_from(kernel);
        plan.n_max = n;
        plan.seed = seed;
        plan.candidate_budget = budget;
        const Configuration c = greedy_sequence(plan);
        return rows_from(c.points, plan.set.ambient_dim);
      },
      py::arg("set"), py::arg("kernel"), py::arg("n"), py::arg("seed") = 1,
      py::arg("budget") = 4096, "Greedy energy sequence (ordered).");

  m.def(
      "minimize",
      [](const std::string& set, const py::object& kernel, int n, std::uint64_t seed,
         int restarts, int max_iters) {
        MinimizePlan plan;
        plan.set = CompactSetSpec::from_name(set);
        plan.kernel = kernel_from(kernel);
        plan.n = n;
        plan.restarts = restarts;
        plan.max_iters = max_iters;
        const MinimizeResult res = minimize_energy(plan, seed);
        return py::make_tuple(rows_from(res.config.points, plan.set.ambient_dim), res.energy);
      },
      py::arg("set"), py::arg("kernel"), py::arg("n"), py::arg("seed") = 1,
      py::arg("restarts") = 0, py::arg("max_iters") = 0,
      "Near-minimal configuration: (points, energy).");

  m.def(
      "separation",
      [](const std::string& set, const Rows& points) {
        return separation(config_from(set, points));
      },
      py::arg("set"), py::arg("points"), "Minimal pairwise distance.");

  m.def(
      "covering_radius",
      [](const std::string& set, const Rows& points, std::size_t budget, std::uint64_t seed) {
        const CoveringResult cov = covering_radius(config_from(set, points), budget, seed);
        return py::make_tuple(cov.raw, cov.refined);
      },
      py::arg("set"), py::arg("points"), py::arg("budget") = 20000, py::arg("seed") = 1);

  m.def(
      "fit_exponent",
      [](const std::vector<std::pair<double, double>>& pairs) {
        const ExponentFit f = fit_exponent(pairs);
        py::dict out;
        out["slope"] = f.slope;
        out["intercept"] = f.intercept;
        out["stderr"] = f.stderr_slope;
        out["residual"] = f.residual_rms;
        return out;
      },
      py::arg("pairs"), "Least-squares slope of log(value) vs log(N).");

  m.def(
      "equilibrium_density",
      [](const std::string& set, const py::object& kernel, const std::vector<double>& x) {
        const EquilibriumMeasure em =
            EquilibriumMeasure::for_set(CompactSetSpec::from_name(set), kernel_from(kernel));
        return density(em, point_from(x));
      },
      py::arg("set"), py::arg("kernel"), py::arg("x"));

  m.def(
      "measure_of_ball",
      [](const std::string& set, const py::object& kernel, const std::vector<double>& center,
         double r) {
        const EquilibriumMeasure em =
            EquilibriumMeasure::for_set(CompactSetSpec::from_name(set), kernel_from(kernel));
        return measure_of_ball(em, point_from(center), r);
      },
      py::arg("set"), py::arg("kernel"), py::arg("center"), py::arg("r"));

  m.def(
      "wiener_estimate",
      [](const std::string& set, const py::object& kernel, int n) {
        return wiener_estimate(kernel_from(kernel), CompactSetSpec::from_name(set), n);
      },
      py::arg("set"), py::arg("kernel"), py::arg("n"));

  m.def(
      "run_canned",
      [](const std::string& name, const std::string& out_dir) {
        const ScalingReport rep = run_canned(name, out_dir);
        return py::make_tuple(rep.all_pass(), rep.summary());
      },
      py::arg("name"), py::arg("out_dir") = "",
      "Run a canned experiment; returns (all_pass, summary).");

  m.def("canned_experiments", [] { return canned_experiment_names(); });

  m.attr("__version__") = "0.1.0";
}
