#pragma once

#include <optional>
#include <string>

#include "rieszlab/configuration.hpp"
#include "rieszlab/kernel.hpp"

namespace rieszlab {

struct PointsFile {
  Configuration config;
  std::optional<KernelSpec> kernel;  // kernel recorded at save time, if any
};

/// CSV with a metadata comment line carrying set, kernel, provenance and
/// seed. Coordinates are written with 17 significant digits, so a round trip
/// reproduces them exactly.
void save_points(const Configuration& omega, const std::string& path,
                 const std::optional<KernelSpec>& kernel = std::nullopt);

/// Loads a points CSV. Files without the metadata line are accepted as
/// legacy input: provenance defaults to Explicit and the set must be given
/// by `fallback_set`. Throws std::runtime_error on malformed input,
/// dimension mismatch, or points off the set (residual > 1e-8).
PointsFile load_points(const std::string& path,
                       const std::optional<CompactSetSpec>& fallback_set = std::nullopt);

}  // namespace rieszlab
