#include "mobembed/topology.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mobembed/errors.hpp"

namespace mobembed {

std::vector<int> degree(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  return deg;
}

std::vector<double> clustering_coefficient(const Graph& g) {
  std::vector<double> cc(static_cast<std::size_t>(g.n), 0.0);
  for (int v = 0; v < g.n; ++v) {
    const auto& nb = g.adj[static_cast<std::size_t>(v)];
    const int k = static_cast<int>(nb.size());
    if (k < 2) continue;
    int links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) ++links;
      }
    }
    cc[static_cast<std::size_t>(v)] = 2.0 * links / (static_cast<double>(k) * (k - 1));
  }
  return cc;
}

std::vector<double> betweenness(const Graph& g) {
  const int n = g.n;
  std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
  if (n < 3) return bc;

  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<double> sigma(static_cast<std::size_t>(n));
  std::vector<double> delta(static_cast<std::size_t>(n));
  std::vector<int> order;
  std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
  order.reserve(static_cast<std::size_t>(n));

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    dist[static_cast<std::size_t>(s)] = 0;
    sigma[static_cast<std::size_t>(s)] = 1.0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      order.push_back(v);
      for (const int w : g.adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1) {
          sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
          preds[static_cast<std::size_t>(w)].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (const int v : preds[static_cast<std::size_t>(w)]) {
        delta[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(v)] /
                                              sigma[static_cast<std::size_t>(w)] *
                                              (1.0 + delta[static_cast<std::size_t>(w)]);
      }
      if (w != s) bc[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
    }
  }
  // each unordered pair was counted twice; scale into [0,1]
  const double norm = static_cast<double>(n - 1) * (n - 2);
  for (auto& b : bc) b /= norm;
  return bc;
}

std::vector<double> closeness(const Graph& g) {
  const int n = g.n;
  std::vector<double> cl(static_cast<std::size_t>(n), 0.0);
  if (n < 2) return cl;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    long long sum = 0;
    int reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const int w : g.adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          sum += dist[static_cast<std::size_t>(w)];
          ++reached;
          q.push(w);
        }
      }
    }
    if (reached < 2) continue;  // isolated
    const double c = static_cast<double>(reached - 1);
    cl[static_cast<std::size_t>(s)] =
        (c / static_cast<double>(n - 1)) * (c / static_cast<double>(sum));
  }
  return cl;
}

EigResult eigenvector_centrality(const Graph& g, double tol, int max_iter) {
  const int n = g.n;
  EigResult res;
  res.values.assign(static_cast<std::size_t>(n), n > 0 ? 1.0 / std::sqrt(n) : 0.0);
  if (n == 0 || g.edge_count() == 0) return res;  // all-equal by convention

  std::vector<double> next(static_cast<std::size_t>(n));
  for (int it = 1; it <= max_iter; ++it) {
    auto& x = res.values;
    for (int v = 0; v < n; ++v) {
      double acc = 0.5 * x[static_cast<std::size_t>(v)];
      for (const int w : g.adj[static_cast<std::size_t>(v)]) acc += x[static_cast<std::size_t>(w)];
      next[static_cast<std::size_t>(v)] = acc;
    }
    double norm = 0.0;
    for (const double v : next) norm += v * v;
    norm = std::sqrt(norm);
    double diff = 0.0;
    for (int v = 0; v < n; ++v) {
      next[static_cast<std::size_t>(v)] /= norm;
      diff = std::max(diff,
                      std::abs(next[static_cast<std::size_t>(v)] - x[static_cast<std::size_t>(v)]));
    }
    x.swap(next);
    res.iterations = it;
    if (diff < tol) return res;
  }
  res.converged = false;
  return res;
}

GraphTopology graph_topology(const Graph& g) {
  GraphTopology t;
  t.degree = degree(g);
  t.betweenness = betweenness(g);
  t.closeness = closeness(g);
  auto eig = eigenvector_centrality(g);
  t.eigenvector = std::move(eig.values);
  t.eig_converged = eig.converged;
  t.eig_iterations = eig.iterations;
  t.clustering = clustering_coefficient(g);
  return t;
}

std::vector<GraphTopology> topology_table(const GraphSequence& seq) {
  std::vector<GraphTopology> table(seq.graphs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(seq.graphs.size()); ++t) {
    table[static_cast<std::size_t>(t)] = graph_topology(seq.graphs[static_cast<std::size_t>(t)]);
  }
  return table;
}

Matrix topology_node_averages(const std::vector<GraphTopology>& table) {
  if (table.empty()) throw ValidationError("topology_node_averages: empty table");
  const int n = static_cast<int>(table.front().degree.size());
  Matrix avg(n, 5);
  for (const auto& win : table) {
    for (int v = 0; v < n; ++v) {
      avg(v, 0) += win.degree[static_cast<std::size_t>(v)];
      avg(v, 1) += win.betweenness[static_cast<std::size_t>(v)];
      avg(v, 2) += win.closeness[static_cast<std::size_t>(v)];
      avg(v, 3) += win.eigenvector[static_cast<std::size_t>(v)];
      avg(v, 4) += win.clustering[static_cast<std::size_t>(v)];
    }
  }
  const double t_count = static_cast<double>(table.size());
  for (double& x : avg.a) x /= t_count;
  return avg;
}

namespace serial {

std::vector<GraphTopology> topology_table(const GraphSequence& seq) {
  std::vector<GraphTopology> table;
  table.reserve(seq.graphs.size());
  for (const auto& g : seq.graphs) table.push_back(graph_topology(g));
  return table;
}

}  // namespace serial

}  // namespace mobembed
