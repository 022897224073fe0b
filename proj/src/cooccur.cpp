#include "mobembed/cooccur.hpp"

#include <algorithm>
#include <cmath>

#include "mobembed/errors.hpp"

namespace mobembed {

Matrix cooccurrence_counts(const WalkCorpus& corpus, int n_nodes, int radius) {
  if (radius < 1) throw ValidationError("cooccurrence_counts: radius must be >= 1");
  if (n_nodes < 1) throw ValidationError("cooccurrence_counts: n_nodes must be >= 1");
  Matrix counts(n_nodes, n_nodes);
  for (const auto& walk : corpus.walks) {
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i) {
      const int lo = std::max(0, i - radius);
      const int hi = std::min(len - 1, i + radius);
      for (int j = lo; j <= hi; ++j) {
        if (j == i) continue;
        counts(walk[static_cast<std::size_t>(i)], walk[static_cast<std::size_t>(j)]) += 1.0;
      }
    }
  }
  return counts;
}

Matrix ppmi(const Matrix& counts) {
  if (counts.rows != counts.cols) throw ValidationError("ppmi: counts must be square");
  const int n = counts.rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (counts(i, j) < 0.0 || counts(i, j) != counts(j, i))
        throw ValidationError("ppmi: counts must be symmetric and nonnegative");
    }
  }
  std::vector<double> row_sum(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row_sum[static_cast<std::size_t>(i)] += counts(i, j);
    total += row_sum[static_cast<std::size_t>(i)];
  }
  Matrix y(n, n);
  if (total == 0.0) return y;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double c = counts(i, j);
      if (c <= 0.0) continue;
      const double pmi = std::log(c * total / (row_sum[static_cast<std::size_t>(i)] *
                                               row_sum[static_cast<std::size_t>(j)]));
      y(i, j) = std::max(0.0, pmi);
    }
  }
  return y;
}

std::vector<PpmiMatrix> ppmi_sequence(const std::vector<WalkCorpus>& corpora, int n_nodes,
                                      int radius) {
  std::vector<PpmiMatrix> out(corpora.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(corpora.size()); ++t) {
    const auto& corpus = corpora[static_cast<std::size_t>(t)];
    auto& slot = out[static_cast<std::size_t>(t)];
    slot.window = corpus.window;
    slot.radius = radius;
    slot.y = ppmi(cooccurrence_counts(corpus, n_nodes, radius));
  }
  return out;
}

namespace serial {

std::vector<PpmiMatrix> ppmi_sequence(const std::vector<WalkCorpus>& corpora, int n_nodes,
                                      int radius) {
  std::vector<PpmiMatrix> out;
  out.reserve(corpora.size());
  for (const auto& corpus : corpora) {
    PpmiMatrix slot;
    slot.window = corpus.window;
    slot.radius = radius;
    slot.y = ppmi(cooccurrence_counts(corpus, n_nodes, radius));
    out.push_back(std::move(slot));
  }
  return out;
}

}  // namespace serial

}  // namespace mobembed
