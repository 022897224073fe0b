#pragma once

#include <span>
#include <string>
#include <vector>

#include "mobembed/matrix.hpp"

namespace mobembed {

struct CosineResult {
  double value = 0.0;
  bool degenerate = false;  // at least one zero vector
};

// 1 - x.y / (||x|| ||y||), clamped to [0, 2]. Zero vectors yield 1.0 with the
// degeneracy flag set instead of an error.
CosineResult cosine_distance(std::span<const double> x, std::span<const double> y);

enum class MobilityMode { consecutive, forward_all_pairs };

struct MobilityEntry {
  int window_i = 0;  // 1-based, window_i < window_j
  int window_j = 0;
  double distance = 0.0;
  bool degenerate = false;
};

// Cosine distances between a node's embeddings across windows: consecutive
// mode emits (t, t+1); forward mode every (i, j) with i < j.
std::vector<MobilityEntry> mobility_series(const std::vector<Matrix>& embeddings, int node,
                                           MobilityMode mode);

struct CvResult {
  double value = 0.0;   // percentage: 100 * population stdev / mean
  bool defined = false;
};

CvResult cv(std::span<const double> values);

inline constexpr double kHighCvThreshold = 30.0;

struct PearsonResult {
  double r = 0.0;
  double p_value = 1.0;  // two-sided, t distribution with len-2 dof
  bool defined = false;
};

PearsonResult pearson(std::span<const double> x, std::span<const double> y);

struct ZscoreResult {
  Matrix z;                             // same shape as the input
  std::vector<std::uint8_t> flat_col;   // 1 where a column had zero stdev
};

// Column-wise z-score (population stdev) of a node x window matrix.
ZscoreResult zscore_by_window(const Matrix& values);

struct NodeStats {
  int node = 0;
  double avg_cosdist = 0.0;
  CvResult cv_cosdist;
  double avg_norm = 0.0;
  CvResult cv_norm;
  bool high_mobility = false;  // cv_cosdist > 30
  bool high_norm_cv = false;   // cv_norm > 30
  bool degenerate = false;     // some cosine entry involved a zero vector
};

struct CorrelationRow {
  std::string metric_a;
  std::string metric_b;
  PearsonResult result;
};

struct AnalyticsReport {
  std::vector<NodeStats> nodes;
  Matrix norm;            // node x window vector norms
  ZscoreResult norm_zscore;
  Matrix node_pearson;    // n x n Pearson of node norm series (NaN = undefined)
  std::vector<CorrelationRow> embedding_pairs;   // 4 rows
  std::vector<CorrelationRow> topology_pairs;    // 10 rows
};

// topo_avg columns: degree, betweenness, closeness, eigenvector, clustering.
AnalyticsReport build_report(const std::vector<Matrix>& embeddings, const Matrix& topo_avg,
                             MobilityMode mode);

}  // namespace mobembed
