#include "mobembed/graph.hpp"

#include <algorithm>
#include <cmath>

#include "mobembed/errors.hpp"

namespace mobembed {

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
  adj[static_cast<std::size_t>(u)].push_back(v);
  adj[static_cast<std::size_t>(v)].push_back(u);
}

std::size_t Graph::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& nb : adj) deg_sum += nb.size();
  return deg_sum / 2;
}

namespace {

struct Piece {
  double t0, t1, x, y;
};

// node's segments clipped to [w0, w1)
void clip_segments(const std::vector<Segment>& segs, double w0, double w1,
                   std::vector<Piece>& out) {
  out.clear();
  for (const auto& s : segs) {
    if (s.t_end <= w0) continue;
    if (s.t_start >= w1) break;
    out.push_back({std::max(s.t_start, w0), std::min(s.t_end, w1), s.x, s.y});
  }
}

Graph build_window(const PositionTrace& trace, double w0, double w1, double radius,
                   double min_contact_s) {
  const int n = static_cast<int>(trace.segments.size());
  const double r2 = radius * radius;
  Graph g(n);
  std::vector<std::vector<Piece>> pieces(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    clip_segments(trace.segments[static_cast<std::size_t>(v)], w0, w1,
                  pieces[static_cast<std::size_t>(v)]);
  }
  for (int u = 0; u < n; ++u) {
    const auto& pu = pieces[static_cast<std::size_t>(u)];
    for (int v = u + 1; v < n; ++v) {
      const auto& pv = pieces[static_cast<std::size_t>(v)];
      double contact = 0.0;
      bool linked = false;
      std::size_t i = 0, j = 0;
      while (i < pu.size() && j < pv.size()) {
        const double lo = std::max(pu[i].t0, pv[j].t0);
        const double hi = std::min(pu[i].t1, pv[j].t1);
        if (hi > lo) {
          const double dx = pu[i].x - pv[j].x;
          const double dy = pu[i].y - pv[j].y;
          if (dx * dx + dy * dy <= r2) {
            contact += hi - lo;
            if (min_contact_s <= 0.0 || contact >= min_contact_s) {
              linked = true;
              break;
            }
          }
        }
        if (pu[i].t1 <= pv[j].t1) ++i; else ++j;
      }
      if (linked) g.add_edge(u, v);
    }
  }
  return g;
}

std::size_t total_segments(const PositionTrace& trace) {
  std::size_t total = 0;
  for (const auto& s : trace.segments) total += s.size();
  return total;
}

int window_count(const PositionTrace& trace, double window_s, bool& truncated) {
  const int t = std::max(1, static_cast<int>(std::ceil(trace.duration_s / window_s - 1e-9)));
  truncated = static_cast<double>(t) * window_s > trace.duration_s + 1e-9;
  return t;
}

void check_inputs(const PositionTrace& trace, double window_s, double radius) {
  if (trace.segments.empty() || total_segments(trace) == 0)
    throw ValidationError("build_graph_sequence: empty trace");
  if (!(window_s > 0.0)) throw ValidationError("build_graph_sequence: window_s must be > 0");
  if (!(radius > 0.0)) throw ValidationError("build_graph_sequence: radius must be > 0");
}

}  // namespace

GraphSequence build_graph_sequence(const PositionTrace& trace, double window_s,
                                   double contact_radius_m, double min_contact_s) {
  check_inputs(trace, window_s, contact_radius_m);
  GraphSequence seq;
  seq.window_s = window_s;
  const int t_count = window_count(trace, window_s, seq.truncated_last);
  seq.graphs.resize(static_cast<std::size_t>(t_count));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < t_count; ++t) {
    seq.graphs[static_cast<std::size_t>(t)] =
        build_window(trace, t * window_s, (t + 1) * window_s, contact_radius_m, min_contact_s);
  }
  return seq;
}

namespace serial {

GraphSequence build_graph_sequence(const PositionTrace& trace, double window_s,
                                   double contact_radius_m, double min_contact_s) {
  check_inputs(trace, window_s, contact_radius_m);
  GraphSequence seq;
  seq.window_s = window_s;
  const int t_count = window_count(trace, window_s, seq.truncated_last);
  seq.graphs.reserve(static_cast<std::size_t>(t_count));
  for (int t = 0; t < t_count; ++t) {
    seq.graphs.push_back(
        build_window(trace, t * window_s, (t + 1) * window_s, contact_radius_m, min_contact_s));
  }
  return seq;
}

}  // namespace serial

}  // namespace mobembed
