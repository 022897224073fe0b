#pragma once

#include <vector>

#include "mobembed/graph.hpp"
#include "mobembed/matrix.hpp"

namespace mobembed {

std::vector<int> degree(const Graph& g);

// local clustering coefficient; nodes with degree < 2 get 0
std::vector<double> clustering_coefficient(const Graph& g);

// Brandes shortest-path betweenness, normalized by (n-1)(n-2)/2
std::vector<double> betweenness(const Graph& g);

// Wasserman-Faust component-scaled closeness:
//   ((c_v - 1) / (n - 1)) * ((c_v - 1) / sum of distances within v's component)
// Isolated nodes get 0.
std::vector<double> closeness(const Graph& g);

struct EigResult {
  std::vector<double> values;  // L2-normalized, entries >= 0
  bool converged = true;
  int iterations = 0;
};

// Principal adjacency eigenvector by power iteration on A + 0.5*I (the shift
// breaks bipartite oscillation without changing eigenvectors). Stops when the
// successive-iterate Linf difference drops below tol. A graph with no edges
// gets the all-equal vector.
EigResult eigenvector_centrality(const Graph& g, double tol = 1e-10, int max_iter = 1000);

struct GraphTopology {
  std::vector<int> degree;
  std::vector<double> betweenness;
  std::vector<double> closeness;
  std::vector<double> eigenvector;
  std::vector<double> clustering;
  bool eig_converged = true;
  int eig_iterations = 0;
};

GraphTopology graph_topology(const Graph& g);

// All windows; parallel across windows (each window's metrics are computed
// serially, so results do not depend on the worker count).
std::vector<GraphTopology> topology_table(const GraphSequence& seq);

// per-node time averages, columns: degree, betweenness, closeness, eigenvector, clustering
Matrix topology_node_averages(const std::vector<GraphTopology>& table);

namespace serial {
std::vector<GraphTopology> topology_table(const GraphSequence& seq);
}

}  // namespace mobembed
