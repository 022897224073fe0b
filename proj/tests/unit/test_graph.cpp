#include <doctest.h>

#include <cmath>

#include "mobembed/errors.hpp"
#include "mobembed/graph.hpp"
#include "mobembed/grm.hpp"

using namespace mobembed;

namespace {

// hand-built piecewise-constant trace
PositionTrace make_trace(double duration, const std::vector<std::vector<Segment>>& segs) {
  PositionTrace t;
  t.duration_s = duration;
  t.segments = segs;
  return t;
}

}  // namespace

TEST_CASE("co-located interval creates an edge, far nodes never link") {
  // nodes 0/1 share a cell for one hour on day 2; node 2 sits 500 m away
  const double day = 86400.0;
  const auto trace = make_trace(
      3 * day,
      {
          {{0, day + 7200, 10, 10}, {day + 7200, day + 10800, 400, 400}, {day + 10800, 3 * day, 10, 10}},
          {{0, day + 7200, 200, 10}, {day + 7200, day + 10800, 430, 440}, {day + 10800, 3 * day, 200, 10}},
          {{0, 3 * day, 800, 800}},
      });
  const auto seq = build_graph_sequence(trace, day, 100.0);
  REQUIRE(seq.graphs.size() == 3);
  CHECK(!seq.graphs[0].has_edge(0, 1));
  CHECK(seq.graphs[1].has_edge(0, 1));  // distance 50 m for an hour
  CHECK(!seq.graphs[2].has_edge(0, 1));
  for (const auto& g : seq.graphs) {
    CHECK(!g.has_edge(0, 2));
    CHECK(!g.has_edge(1, 2));
  }
}

TEST_CASE("87 daily windows from an 87-day trace") {
  const auto trace = make_trace(87 * 86400.0, {{{0, 87 * 86400.0, 0, 0}}, {{0, 87 * 86400.0, 1000, 0}}});
  const auto seq = build_graph_sequence(trace, 86400.0, 100.0);
  CHECK(seq.graphs.size() == 87);
  CHECK(!seq.truncated_last);
}

TEST_CASE("a trace shorter than one window yields a single flagged window") {
  const auto trace = make_trace(3600.0, {{{0, 3600.0, 0, 0}}, {{0, 3600.0, 10, 0}}});
  const auto seq = build_graph_sequence(trace, 86400.0, 100.0);
  CHECK(seq.graphs.size() == 1);
  CHECK(seq.truncated_last);
  CHECK(seq.graphs[0].has_edge(0, 1));
}

TEST_CASE("empty traces are rejected") {
  PositionTrace empty;
  CHECK_THROWS_AS((void)build_graph_sequence(empty, 86400.0, 100.0), ValidationError);
  const auto no_segments = make_trace(10.0, {{}, {}});
  CHECK_THROWS_AS((void)build_graph_sequence(no_segments, 86400.0, 100.0), ValidationError);
  const auto fine = make_trace(10.0, {{{0, 10, 0, 0}}});
  CHECK_THROWS_AS((void)build_graph_sequence(fine, 0.0, 100.0), ValidationError);
  CHECK_THROWS_AS((void)build_graph_sequence(fine, 86400.0, 0.0), ValidationError);
}

TEST_CASE("boundary instants shared by half-open segments do not count as contact") {
  // node 1 reaches node 0's position exactly when node 0 leaves it
  const auto trace = make_trace(
      100.0, {{{0, 50, 0, 0}, {50, 100, 1000, 1000}}, {{0, 50, 500, 500}, {50, 100, 0, 0}}});
  const auto seq = build_graph_sequence(trace, 100.0, 100.0);
  CHECK(!seq.graphs[0].has_edge(0, 1));
}

TEST_CASE("minimum contact duration filters short encounters") {
  const auto trace = make_trace(
      1000.0, {{{0, 1000, 0, 0}}, {{0, 400, 500, 500}, {400, 500, 10, 0}, {500, 1000, 500, 500}}});
  CHECK(build_graph_sequence(trace, 1000.0, 100.0).graphs[0].has_edge(0, 1));
  CHECK(build_graph_sequence(trace, 1000.0, 100.0, 100.0).graphs[0].has_edge(0, 1));
  CHECK(!build_graph_sequence(trace, 1000.0, 100.0, 100.5).graphs[0].has_edge(0, 1));
}

TEST_CASE("enlarging the radius never removes an edge") {
  TraceConfig cfg;
  cfg.n_nodes = 25;
  cfg.n_groups = 50;
  cfg.sim_duration_s = 7 * 86400.0;
  cfg.grid_rows = 10;
  cfg.grid_cols = 10;
  cfg.beta_size = 8;
  cfg.seed = 33;
  const auto trace = generate_trace(cfg).trace;
  const auto small = build_graph_sequence(trace, 86400.0, 60.0);
  const auto large = build_graph_sequence(trace, 86400.0, 140.0);
  REQUIRE(small.graphs.size() == large.graphs.size());
  std::size_t small_edges = 0, large_edges = 0;
  for (std::size_t t = 0; t < small.graphs.size(); ++t) {
    small_edges += small.graphs[t].edge_count();
    large_edges += large.graphs[t].edge_count();
    for (int u = 0; u < small.graphs[t].n; ++u) {
      for (const int v : small.graphs[t].adj[static_cast<std::size_t>(u)]) {
        CHECK(large.graphs[t].has_edge(u, v));
      }
    }
  }
  CHECK(small_edges <= large_edges);
  CHECK(large_edges > 0);
}

TEST_CASE("windows are symmetric and self-loop free on generated traces") {
  TraceConfig cfg;
  cfg.n_nodes = 20;
  cfg.n_groups = 40;
  cfg.sim_duration_s = 5 * 86400.0;
  cfg.grid_rows = 8;
  cfg.grid_cols = 8;
  cfg.beta_size = 6;
  cfg.seed = 9;
  const auto trace = generate_trace(cfg).trace;
  const auto seq = build_graph_sequence(trace, 86400.0, 100.0);
  for (const auto& g : seq.graphs) {
    for (int u = 0; u < g.n; ++u) {
      for (const int v : g.adj[static_cast<std::size_t>(u)]) {
        CHECK(u != v);
        CHECK(g.has_edge(v, u));
      }
    }
  }
}
