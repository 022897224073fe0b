#include "mobembed/walks.hpp"

#include <algorithm>

#include "mobembed/errors.hpp"

namespace mobembed {

namespace {

void check_params(const WalkParams& params) {
  if (params.nw < 1) throw ValidationError("walks.nw must be >= 1");
  if (params.wl < 2) throw ValidationError("walks.wl must be >= 2");
  if (!(params.p > 0.0)) throw ValidationError("walks.p must be > 0");
  if (!(params.q > 0.0)) throw ValidationError("walks.q must be > 0");
}

std::vector<int> one_walk(const Graph& g, const WalkParams& params, int start, Rng& rng) {
  std::vector<int> walk;
  walk.reserve(static_cast<std::size_t>(params.wl));
  walk.push_back(start);
  int prev = -1;
  int curr = start;
  while (static_cast<int>(walk.size()) < params.wl) {
    const auto& nb = g.adj[static_cast<std::size_t>(curr)];
    if (nb.empty()) break;
    int next;
    if (prev < 0) {
      next = nb[rng.uniform_index(nb.size())];
    } else {
      const auto w = step_weights(g, prev, curr, params.p, params.q);
      double total = 0.0;
      for (const double x : w) total += x;
      const double u = rng.uniform() * total;
      double acc = 0.0;
      std::size_t pick = w.size() - 1;
      for (std::size_t i = 0; i < w.size(); ++i) {
        acc += w[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
      next = nb[pick];
    }
    walk.push_back(next);
    prev = curr;
    curr = next;
  }
  return walk;
}

std::vector<int> start_nodes(const Graph& g) {
  std::vector<int> starts;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) > 0) starts.push_back(v);
  }
  return starts;
}

}  // namespace

std::vector<double> step_weights(const Graph& g, int prev, int curr, double p, double q) {
  const auto& nb = g.adj[static_cast<std::size_t>(curr)];
  std::vector<double> w(nb.size(), 1.0);
  if (prev < 0) return w;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (nb[i] == prev) {
      w[i] = 1.0 / p;
    } else if (!g.has_edge(prev, nb[i])) {
      w[i] = 1.0 / q;
    }
  }
  return w;
}

WalkCorpus sample_walks(const Graph& g, const WalkParams& params, int window_index) {
  check_params(params);
  WalkCorpus corpus;
  corpus.window = window_index;
  const auto starts = start_nodes(g);
  if (starts.empty()) {
    corpus.no_edges = true;
    return corpus;
  }
  const std::size_t total = starts.size() * static_cast<std::size_t>(params.nw);
  corpus.walks.resize(total);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t slot = 0; slot < static_cast<std::ptrdiff_t>(total); ++slot) {
    const int start = starts[static_cast<std::size_t>(slot) / params.nw];
    const int k = static_cast<int>(static_cast<std::size_t>(slot) % params.nw);
    Rng rng(stream_key(params.seed, kStreamWalks, static_cast<std::uint64_t>(window_index),
                       static_cast<std::uint64_t>(start), static_cast<std::uint64_t>(k)));
    corpus.walks[static_cast<std::size_t>(slot)] = one_walk(g, params, start, rng);
  }
  return corpus;
}

std::vector<WalkCorpus> sample_walks_sequence(const GraphSequence& seq, const WalkParams& params) {
  check_params(params);
  std::vector<WalkCorpus> corpora(seq.graphs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(seq.graphs.size()); ++t) {
    corpora[static_cast<std::size_t>(t)] = serial::sample_walks(
        seq.graphs[static_cast<std::size_t>(t)], params, static_cast<int>(t) + 1);
  }
  return corpora;
}

namespace serial {

WalkCorpus sample_walks(const Graph& g, const WalkParams& params, int window_index) {
  check_params(params);
  WalkCorpus corpus;
  corpus.window = window_index;
  const auto starts = start_nodes(g);
  if (starts.empty()) {
    corpus.no_edges = true;
    return corpus;
  }
  corpus.walks.reserve(starts.size() * static_cast<std::size_t>(params.nw));
  for (const int start : starts) {
    for (int k = 0; k < params.nw; ++k) {
      Rng rng(stream_key(params.seed, kStreamWalks, static_cast<std::uint64_t>(window_index),
                         static_cast<std::uint64_t>(start), static_cast<std::uint64_t>(k)));
      corpus.walks.push_back(one_walk(g, params, start, rng));
    }
  }
  return corpus;
}

std::vector<WalkCorpus> sample_walks_sequence(const GraphSequence& seq, const WalkParams& params) {
  check_params(params);
  std::vector<WalkCorpus> corpora;
  corpora.reserve(seq.graphs.size());
  for (std::size_t t = 0; t < seq.graphs.size(); ++t) {
    corpora.push_back(serial::sample_walks(seq.graphs[t], params, static_cast<int>(t) + 1));
  }
  return corpora;
}

}  // namespace serial

}  // namespace mobembed
