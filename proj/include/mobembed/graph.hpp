#pragma once

#include <vector>

#include "mobembed/grm.hpp"

namespace mobembed {

// Undirected simple graph over a fixed node universe 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  Graph() = default;
  explicit Graph(int nodes) : n(nodes), adj(static_cast<std::size_t>(nodes)) {}

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // both directions; caller avoids duplicates
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  std::size_t edge_count() const;
};

// One contact graph per non-overlapping window, shared node universe.
struct GraphSequence {
  double window_s = 0.0;
  bool truncated_last = false;  // trace did not fill the final window
  std::vector<Graph> graphs;    // windows 1..T in order
};

// Nodes u,v are linked in window t when their piecewise-constant positions
// come within contact_radius_m for some positive-length interval inside the
// window (at least min_contact_s of accumulated contact when that is > 0).
GraphSequence build_graph_sequence(const PositionTrace& trace, double window_s,
                                   double contact_radius_m, double min_contact_s = 0.0);

namespace serial {
// Reference driver: identical per-window kernel, no OpenMP.
GraphSequence build_graph_sequence(const PositionTrace& trace, double window_s,
                                   double contact_radius_m, double min_contact_s = 0.0);
}  // namespace serial

}  // namespace mobembed
