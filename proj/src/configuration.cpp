#include "rieszlab/configuration.hpp"

#include <stdexcept>

namespace rieszlab {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Greedy:
      return "greedy";
    case Provenance::Minimized:
      return "minimized";
    case Provenance::Explicit:
      return "explicit";
  }
  return "?";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "greedy") return Provenance::Greedy;
  if (name == "minimized") return Provenance::Minimized;
  if (name == "explicit") return Provenance::Explicit;
  throw std::invalid_argument("unknown provenance: " + name);
}

void Configuration::validate(double on_set_tol) const {
  if (points.empty()) throw std::invalid_argument("configuration must have N >= 1 points");
  for (const Point& p : points) {
    if (!p.all_finite()) throw std::invalid_argument("configuration has non-finite point");
    if (membership_residual(set, p) > on_set_tol)
      throw std::invalid_argument("configuration point off the set (residual > tol)");
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (dist2(points[i], points[j]) == 0.0)
        throw std::invalid_argument("configuration has coincident points");
}

Configuration Configuration::prefix(std::size_t n) const {
  Configuration out = *this;
  if (n < points.size()) out.points.resize(n);
  return out;
}

}  // namespace rieszlab
