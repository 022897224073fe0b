#pragma once

// Independent test oracles: straightforward, obviously-correct computations
// kept free of the library's implementation paths.

#include <functional>
#include <vector>

#include "mobembed/graph.hpp"
#include "mobembed/matrix.hpp"
#include "mobembed/rng.hpp"
#include "mobembed/walks.hpp"

namespace oracle {

// adaptive Simpson quadrature
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

// mean of the density ∝ x^(-alpha) exp(-x/beta) on [x_min, upper]
double trunc_powerlaw_mean(double alpha, double beta, double x_min);

// numerically integrated CDF on a geometric grid, linear interpolation between knots
class TruncPowerlawCdf {
 public:
  TruncPowerlawCdf(double alpha, double beta, double x_min, int knots = 4096);
  double operator()(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> cdf_;
};

// exhaustive per-node triangle counting
std::vector<double> bf_clustering(const mobembed::Graph& g);

// shortest-path counting over all (s, t) pairs; same normalization as the library
std::vector<double> bf_betweenness(const mobembed::Graph& g);

// Floyd-Warshall distances + component-scaled formula
std::vector<double> bf_closeness(const mobembed::Graph& g);

struct JacobiEig {
  std::vector<double> eigenvalues;      // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with eigenvalues[k]
};

// cyclic Jacobi rotations on a dense symmetric matrix
JacobiEig jacobi_eigen(const mobembed::Matrix& sym);

// naive double-loop counters and direct PMI formula
mobembed::Matrix naive_cooccurrence(const mobembed::WalkCorpus& corpus, int n, int radius);
mobembed::Matrix naive_ppmi(const mobembed::Matrix& counts);

// plain-loop objective evaluation, independent of the linalg kernels
double naive_objective(const std::vector<mobembed::Matrix>& y,
                       const std::vector<mobembed::Matrix>& u, double lambda, double tau);

mobembed::Graph random_graph(int n, double p, mobembed::Rng& rng);

}  // namespace oracle
