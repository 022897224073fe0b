#pragma once

#include <cstdint>
#include <vector>

#include "mobembed/cooccur.hpp"
#include "mobembed/matrix.hpp"

namespace mobembed {

struct EmbedOptions {
  int d = 50;
  double lambda = 50.0;  // ridge weight
  double tau = 15.0;     // temporal alignment weight
  int context_radius = 5;
  double init_step = 1e-2;
  double tol_rel = 1e-6;
  int max_sweeps = 200;
  std::uint64_t seed = 42;
  bool parallel = true;  // route dense kernels through OpenMP
};

struct EmbeddingSequence {
  int n = 0;
  int d = 0;
  double lambda = 0.0;
  double tau = 0.0;
  std::vector<Matrix> u;                 // one n x d factor per window
  std::vector<double> sweep_loss;        // index 0 = initial loss
  std::vector<double> window_data_loss;  // final 0.5*||Y_t - U_t U_t^T||_F^2 per window
  bool converged = false;
  int sweeps = 0;
};

// L = sum_t 0.5*||Y_t - U_t U_t^T||_F^2 + (lambda/2) * sum_t ||U_t||_F^2
//   + (tau/2) * sum_{t>=2} ||U_t - U_{t-1}||_F^2
double objective(const std::vector<Matrix>& y_seq, const std::vector<Matrix>& u_seq,
                 double lambda, double tau);

// Block-coordinate descent: Gaussian init scaled by 1/sqrt(d), forward+backward
// sweeps over windows, each window updated by a gradient step with backtracking
// line search (halving from init_step until the loss decreases). Stops when the
// relative loss change over a full sweep drops below tol_rel. The returned
// sweep losses are non-increasing; a non-finite loss raises DivergenceError.
EmbeddingSequence fit(const std::vector<Matrix>& y_seq, const EmbedOptions& opt);

inline std::vector<Matrix> ppmi_matrices(const std::vector<PpmiMatrix>& seq) {
  std::vector<Matrix> y;
  y.reserve(seq.size());
  for (const auto& p : seq) y.push_back(p.y);
  return y;
}

}  // namespace mobembed
