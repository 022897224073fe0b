#pragma once

#include <vector>

#include "mobembed/matrix.hpp"
#include "mobembed/walks.hpp"

namespace mobembed {

// Sliding-window co-visit counts: for every ordered position pair (i, j) in a
// walk with 1 <= |i - j| <= radius, count(node_i, node_j) += 1. Symmetric by
// construction; same-node pairs land on the diagonal.
Matrix cooccurrence_counts(const WalkCorpus& corpus, int n_nodes, int radius);

struct PpmiMatrix {
  int window = 0;
  int radius = 0;
  Matrix y;
};

// Positive pointwise mutual information:
//   Y[i][j] = max(0, ln(c_ij * c_total / (c_i * c_j)))  with zero counts -> 0.
Matrix ppmi(const Matrix& counts);

std::vector<PpmiMatrix> ppmi_sequence(const std::vector<WalkCorpus>& corpora, int n_nodes,
                                      int radius);

namespace serial {
std::vector<PpmiMatrix> ppmi_sequence(const std::vector<WalkCorpus>& corpora, int n_nodes,
                                      int radius);
}

}  // namespace mobembed
