#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rieszlab/geometry.hpp"

namespace rieszlab {

enum class Provenance { Greedy, Minimized, Explicit };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

/// An ordered list of N points on a compact set. The ordering matters for
/// greedy sequences; the implied empirical measure is (1/N) sum of point
/// masses and is never stored separately.
struct Configuration {
  CompactSetSpec set;
  std::vector<Point> points;
  Provenance provenance = Provenance::Explicit;
  std::uint64_t seed = 0;

  std::size_t size() const { return points.size(); }

  /// Enforces the invariants: N >= 1, all points finite and on A within
  /// on_set_tol, no coincident points. Throws std::invalid_argument.
  void validate(double on_set_tol = 1e-10) const;

  /// Prefix configuration with the first n points (greedy prefixes).
  Configuration prefix(std::size_t n) const;
};

}  // namespace rieszlab
