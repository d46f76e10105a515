#include "rieszlab/greedy.hpp"

#include <stdexcept>

#include "rieszlab/rng.hpp"

namespace rieszlab {

void GreedyPlan::validate() const {
  if (n_max < 1) throw std::invalid_argument("greedy plan needs n_max >= 1");
  if (candidate_budget < 256)
    throw std::invalid_argument("greedy plan needs candidate_budget >= 256");
}

Point next_greedy_point(const GreedyPlan& plan, const Configuration& omega) {
  if (omega.points.empty()) throw std::invalid_argument("greedy step needs a nonempty prefix");
  const std::vector<Point> candidates =
      sample(plan.set, static_cast<std::size_t>(plan.candidate_budget),
             Rng::mix(plan.seed, 0xca4d1da7eull ^ omega.size()));
  return polarization_min(plan.kernel, omega, candidates, /*refine=*/true, plan.refine_steps)
      .point;
}

Configuration greedy_sequence(const GreedyPlan& plan) {
  plan.validate();
  Configuration omega;
  omega.set = plan.set;
  omega.provenance = Provenance::Greedy;
  omega.seed = plan.seed;
  omega.points.reserve(static_cast<std::size_t>(plan.n_max));

  if (plan.canonical_first) {
    omega.points.push_back(canonical_first_point(plan.set));
  } else {
    omega.points.push_back(sample(plan.set, 1, Rng::mix(plan.seed, 0xf127u))[0]);
  }
  for (int j = 1; j < plan.n_max; ++j) omega.points.push_back(next_greedy_point(plan, omega));
  return omega;
}

}  // namespace rieszlab
