#include "mobembed/powerlaw.hpp"

#include <cmath>

#include "mobembed/errors.hpp"

namespace mobembed {

double sample_trunc_powerlaw(double alpha, double beta, double x_min, Rng& rng) {
  if (!(alpha > 1.0)) throw ValidationError("sample_trunc_powerlaw: alpha must be > 1");
  if (!(beta > 0.0)) throw ValidationError("sample_trunc_powerlaw: beta must be > 0");
  if (!(x_min > 0.0)) throw ValidationError("sample_trunc_powerlaw: x_min must be > 0");
  for (;;) {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    const double x = x_min * std::pow(u, -1.0 / (alpha - 1.0));
    if (rng.uniform() < std::exp(-x / beta)) return x;
  }
}

GroupSizeDist::GroupSizeDist(double alpha_size, int beta_size) {
  if (!(alpha_size > 1.0)) throw ValidationError("sample_group_size: alpha_size must be > 1");
  if (beta_size < 2) throw ValidationError("sample_group_size: beta_size must be >= 2");
  cmf_.resize(static_cast<std::size_t>(beta_size) - 1);
  double total = 0.0;
  for (int s = 2; s <= beta_size; ++s) {
    total += std::pow(static_cast<double>(s), -alpha_size);
    cmf_[static_cast<std::size_t>(s) - 2] = total;
  }
}

int GroupSizeDist::sample(Rng& rng) const {
  const double u = rng.uniform() * cmf_.back();
  // support is at most a few dozen values; linear scan
  for (std::size_t i = 0; i + 1 < cmf_.size(); ++i) {
    if (u < cmf_[i]) return static_cast<int>(i) + 2;
  }
  return static_cast<int>(cmf_.size()) + 1;
}

int sample_group_size(double alpha_size, int beta_size, Rng& rng) {
  return GroupSizeDist(alpha_size, beta_size).sample(rng);
}

}  // namespace mobembed
