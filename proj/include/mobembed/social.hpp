#pragma once

#include <vector>

#include "mobembed/rng.hpp"

namespace mobembed {

struct SocialParams {
  double mean_cluster_size = 10.0;
  double size_shape = 4.0;  // cluster size variance = mean_cluster_size / size_shape
  double p_in = 0.25;
  double p_out = 0.01;
};

// Undirected simple graph over nodes 0..n-1 plus the partition it was built from.
struct SocialGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, no self loops
  std::vector<int> cluster;           // node -> cluster id
  std::vector<int> cluster_sizes;

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  std::size_t edge_count() const;
};

// Gaussian random partition graph: cluster sizes are drawn from a normal law
// around mean_cluster_size, pairs are connected with p_in inside a cluster
// and p_out across clusters, independently.
SocialGraph build_social_graph(int n_nodes, const SocialParams& params, Rng& rng);

}  // namespace mobembed
