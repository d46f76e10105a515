#pragma once

#include <cstdint>

#include "rieszlab/configuration.hpp"
#include "rieszlab/energy.hpp"

namespace rieszlab {

/// Plan for a greedy energy sequence: a_1 fixed (canonical per set, or drawn
/// from `seed`), then every a_N minimizes the potential of its predecessors
/// over A. The infimum over A is approximated by a fresh uniform candidate
/// set per step followed by projected local descent from the best candidate.
struct GreedyPlan {
  KernelSpec kernel;
  CompactSetSpec set;
  int n_max = 1;
  bool canonical_first = true;  // false: first point sampled from `seed`
  std::uint64_t seed = 0;
  int candidate_budget = 4096;
  int refine_steps = 50;

  void validate() const;
};

/// The next greedy point given the current configuration. Candidates are
/// seeded from (plan.seed, omega.size()), so sequences extend prefixes.
Point next_greedy_point(const GreedyPlan& plan, const Configuration& omega);

/// Full greedy sequence of n_max points, provenance Greedy. The first k
/// points equal the output of the same plan with n_max = k.
Configuration greedy_sequence(const GreedyPlan& plan);

}  // namespace rieszlab
