#pragma once

#include <vector>

#include "mobembed/rng.hpp"

namespace mobembed {

// Draws from density p(x) ∝ x^(-alpha) * exp(-x/beta) on [x_min, ∞).
// Proposes from the pure Pareto tail by inverse CDF and thins with the
// exponential cutoff, so the support bound holds exactly.
double sample_trunc_powerlaw(double alpha, double beta, double x_min, Rng& rng);

// Discrete distribution P(s) ∝ s^(-alpha_size) on {2, ..., beta_size}.
// beta_size is a count, so the cutoff acts as a hard truncation.
class GroupSizeDist {
 public:
  GroupSizeDist(double alpha_size, int beta_size);
  int sample(Rng& rng) const;

 private:
  std::vector<double> cmf_;
};

int sample_group_size(double alpha_size, int beta_size, Rng& rng);

}  // namespace mobembed
