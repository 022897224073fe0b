#include "mobembed/social.hpp"

#include <algorithm>
#include <cmath>

#include "mobembed/errors.hpp"

namespace mobembed {

bool SocialGraph::has_edge(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t SocialGraph::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& nb : adj) deg_sum += nb.size();
  return deg_sum / 2;
}

SocialGraph build_social_graph(int n_nodes, const SocialParams& params, Rng& rng) {
  if (n_nodes < 2) throw ValidationError("build_social_graph: n_nodes must be >= 2");
  if (!(params.mean_cluster_size >= 1.0))
    throw ValidationError("build_social_graph: mean_cluster_size must be >= 1");
  if (!(params.size_shape > 0.0))
    throw ValidationError("build_social_graph: size_shape must be > 0");
  if (params.p_in < 0.0 || params.p_in > 1.0 || params.p_out < 0.0 || params.p_out > 1.0)
    throw ValidationError("build_social_graph: edge probabilities must be in [0,1]");

  SocialGraph g;
  g.n = n_nodes;
  g.adj.resize(static_cast<std::size_t>(n_nodes));
  g.cluster.assign(static_cast<std::size_t>(n_nodes), 0);

  const double sd = std::sqrt(params.mean_cluster_size / params.size_shape);
  int assigned = 0;
  int cluster_id = 0;
  while (assigned < n_nodes) {
    int size = static_cast<int>(std::llround(params.mean_cluster_size + sd * rng.normal()));
    size = std::max(size, 1);
    size = std::min(size, n_nodes - assigned);
    for (int v = assigned; v < assigned + size; ++v) g.cluster[v] = cluster_id;
    g.cluster_sizes.push_back(size);
    assigned += size;
    ++cluster_id;
  }

  for (int u = 0; u < n_nodes; ++u) {
    for (int v = u + 1; v < n_nodes; ++v) {
      const double p = (g.cluster[u] == g.cluster[v]) ? params.p_in : params.p_out;
      if (rng.bernoulli(p)) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
      }
    }
  }
  return g;  // neighbor lists are sorted by construction order
}

}  // namespace mobembed
