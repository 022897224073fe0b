#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "mobembed/errors.hpp"
#include "mobembed/walks.hpp"
#include "oracles.hpp"

using namespace mobembed;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

}  // namespace

TEST_CASE("step weights implement the three-case bias") {
  // path 0-1-2-3 plus edge 0-2: from curr=1 with prev=0,
  // neighbor 0 is the return (1/p), 2 is adjacent to prev (1), and on the
  // plain path a two-hop neighbor gets 1/q
  const auto g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  const auto w = step_weights(g, 0, 1, 1.0, 0.5);
  REQUIRE(w.size() == 2);  // neighbors of 1: {0, 2}
  CHECK(w[0] == 1.0);      // back to prev, 1/p with p=1
  CHECK(w[1] == 1.0);      // 2 is adjacent to 0

  const auto path = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto w2 = step_weights(path, 1, 2, 1.0, 0.5);
  REQUIRE(w2.size() == 2);  // neighbors of 2: {1, 3}
  CHECK(w2[0] == 1.0);      // return
  CHECK(w2[1] == 2.0);      // exploring further, 1/q
}

TEST_CASE("p=q=1 removes the bias") {
  const auto g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  for (const double w : step_weights(g, 1, 2, 1.0, 1.0)) CHECK(w == 1.0);
}

TEST_CASE("triangle weights: both options equal under p=1, q=0.5") {
  const auto g = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto w = step_weights(g, 0, 1, 1.0, 0.5);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == 1.0);
}

TEST_CASE("first step is uniform") {
  const auto g = from_edges(3, {{0, 1}, {0, 2}});
  const auto w = step_weights(g, -1, 0, 1.0, 0.25);
  CHECK(w == std::vector<double>{1.0, 1.0});
}

TEST_CASE("a single edge forces alternation") {
  const auto g = from_edges(2, {{0, 1}});
  WalkParams params;
  params.nw = 3;
  params.wl = 4;
  const auto corpus = sample_walks(g, params, 1);
  REQUIRE(corpus.walks.size() == 6);
  for (const auto& walk : corpus.walks) {
    REQUIRE(walk.size() == 4);
    const std::vector<int> expect_a{0, 1, 0, 1}, expect_b{1, 0, 1, 0};
    CHECK((walk == expect_a || walk == expect_b));
  }
}

TEST_CASE("walk count is nw times the non-isolated node count") {
  // 70 nodes; nodes 0..59 sit on a cycle, the rest are isolated
  Graph g(70);
  for (int v = 0; v < 60; ++v) g.add_edge(v, (v + 1) % 60);
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  WalkParams params;
  params.nw = 4;
  const auto corpus = sample_walks(g, params, 3);
  CHECK(corpus.walks.size() == 240);
  for (const auto& walk : corpus.walks) CHECK(walk.front() < 60);
}

TEST_CASE("every consecutive pair in a walk is an edge") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_graph(12, 0.3, rng);
    WalkParams params;
    params.seed = trial;
    const auto corpus = sample_walks(g, params, trial + 1);
    for (const auto& walk : corpus.walks) {
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        CHECK(g.has_edge(walk[i], walk[i + 1]));
      }
    }
  }
}

TEST_CASE("edgeless windows produce an empty flagged corpus") {
  const Graph g(6);
  const auto corpus = sample_walks(g, WalkParams{}, 1);
  CHECK(corpus.no_edges);
  CHECK(corpus.walks.empty());
}

TEST_CASE("step frequencies from (prev=0, curr=1) match the weights within 1% L1") {
  // neighbors of 1 are {0, 2, 3, 4}: 0 is the return (1/p), 2 is adjacent to
  // 0 (weight 1), 3 and 4 are two hops out (1/q)
  const auto g = from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}});
  WalkParams params;
  params.nw = 200000;
  params.wl = 3;
  params.p = 4.0;
  params.q = 0.5;
  params.seed = 99;
  const auto corpus = sample_walks(g, params, 1);
  std::map<int, int> counts;
  int conditioned = 0;  // walks that happened to start 0 -> 1
  for (const auto& walk : corpus.walks) {
    if (walk[0] != 0 || walk[1] != 1) continue;
    ++counts[walk[2]];
    ++conditioned;
  }
  REQUIRE(conditioned > 50000);
  const auto w = step_weights(g, 0, 1, params.p, params.q);
  const std::vector<int> neighbors{0, 2, 3, 4};
  double total = 0.0;
  for (const double x : w) total += x;
  double l1 = 0.0;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    l1 += std::abs(counts[neighbors[i]] / static_cast<double>(conditioned) - w[i] / total);
  }
  CHECK(l1 < 0.01);
}

TEST_CASE("corpora are deterministic per seed and differ across windows") {
  Rng rng(5);
  const auto g = oracle::random_graph(15, 0.3, rng);
  WalkParams params;
  const auto a = sample_walks(g, params, 2);
  const auto b = sample_walks(g, params, 2);
  const auto c = sample_walks(g, params, 3);
  CHECK(a.walks == b.walks);
  CHECK(a.walks != c.walks);
  WalkParams other = params;
  other.seed = 43;
  CHECK(sample_walks(g, other, 2).walks != a.walks);
}

TEST_CASE("invalid walk parameters are rejected") {
  const auto g = from_edges(2, {{0, 1}});
  WalkParams params;
  params.nw = 0;
  CHECK_THROWS_AS((void)sample_walks(g, params, 1), ValidationError);
  params.nw = 1;
  params.wl = 1;
  CHECK_THROWS_AS((void)sample_walks(g, params, 1), ValidationError);
  params.wl = 8;
  params.q = 0.0;
  CHECK_THROWS_AS((void)sample_walks(g, params, 1), ValidationError);
}
