#pragma once

#include <cstdint>
#include <vector>

#include "mobembed/graph.hpp"
#include "mobembed/rng.hpp"

namespace mobembed {

struct WalkParams {
  int nw = 4;       // walks per node
  int wl = 8;       // nodes per walk, including the start
  double p = 1.0;   // return parameter
  double q = 0.5;   // in-out parameter
  std::uint64_t seed = 42;
};

struct WalkCorpus {
  int window = 0;  // 1-based window index
  bool no_edges = false;
  std::vector<std::vector<int>> walks;  // ordered by (start node, walk index)
};

// Second-order bias for the neighbors of curr, aligned with g.adj[curr]:
// 1/p for the previous node, 1 for neighbors of the previous node, 1/q
// otherwise. prev < 0 (first step) gives uniform weights.
std::vector<double> step_weights(const Graph& g, int prev, int curr, double p, double q);

// nw walks from every non-isolated node, ascending node id. Each walk has its
// own RNG substream keyed by (seed, window, start, walk index), so corpora are
// identical regardless of execution order or worker count.
WalkCorpus sample_walks(const Graph& g, const WalkParams& params, int window_index);

std::vector<WalkCorpus> sample_walks_sequence(const GraphSequence& seq, const WalkParams& params);

namespace serial {
WalkCorpus sample_walks(const Graph& g, const WalkParams& params, int window_index);
std::vector<WalkCorpus> sample_walks_sequence(const GraphSequence& seq, const WalkParams& params);
}  // namespace serial

}  // namespace mobembed
