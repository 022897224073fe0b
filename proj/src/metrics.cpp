#include "mobembed/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

#include "mobembed/errors.hpp"

namespace mobembed {

CosineResult cosine_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("cosine_distance: dimension mismatch");
  double dot = 0.0, nx = 0.0, ny = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y[i];
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  if (nx == 0.0 || ny == 0.0) return {1.0, true};
  const double value = 1.0 - dot / (std::sqrt(nx) * std::sqrt(ny));
  return {std::clamp(value, 0.0, 2.0), false};
}

std::vector<MobilityEntry> mobility_series(const std::vector<Matrix>& embeddings, int node,
                                           MobilityMode mode) {
  const int t_count = static_cast<int>(embeddings.size());
  if (t_count == 0) throw ValidationError("mobility_series: empty embedding sequence");
  if (node < 0 || node >= embeddings.front().rows)
    throw ValidationError("mobility_series: node outside universe");
  const int d = embeddings.front().cols;
  auto row = [&](int t) {
    return std::span<const double>(embeddings[static_cast<std::size_t>(t)].row(node),
                                   static_cast<std::size_t>(d));
  };
  std::vector<MobilityEntry> out;
  if (mode == MobilityMode::consecutive) {
    out.reserve(static_cast<std::size_t>(std::max(0, t_count - 1)));
    for (int t = 0; t + 1 < t_count; ++t) {
      const auto c = cosine_distance(row(t), row(t + 1));
      out.push_back({t + 1, t + 2, c.value, c.degenerate});
    }
  } else {
    out.reserve(static_cast<std::size_t>(t_count) * (t_count - 1) / 2);
    for (int i = 0; i < t_count; ++i) {
      for (int j = i + 1; j < t_count; ++j) {
        const auto c = cosine_distance(row(i), row(j));
        out.push_back({i + 1, j + 1, c.value, c.degenerate});
      }
    }
  }
  return out;
}

namespace {

double mean_of(std::span<const double> values) {
  double s = 0.0;
  for (const double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double pop_stdev(std::span<const double> values, double mean) {
  double s = 0.0;
  for (const double v : values) s += (v - mean) * (v - mean);
  return std::sqrt(s / static_cast<double>(values.size()));
}

}  // namespace

CvResult cv(std::span<const double> values) {
  if (values.size() < 2) return {};
  const double mean = mean_of(values);
  if (mean == 0.0) return {};
  return {100.0 * pop_stdev(values, mean) / mean, true};
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("pearson: series lengths differ");
  const std::size_t n = x.size();
  if (n < 3) return {};
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return {};
  double r = sxy / std::sqrt(sxx * syy);
  r = std::clamp(r, -1.0, 1.0);

  const double dof = static_cast<double>(n) - 2.0;
  double p = 0.0;
  if (std::abs(r) < 1.0) {
    const double t = std::abs(r) * std::sqrt(dof / (1.0 - r * r));
    const boost::math::students_t dist(dof);
    p = 2.0 * boost::math::cdf(boost::math::complement(dist, t));
  }
  return {r, p, true};
}

ZscoreResult zscore_by_window(const Matrix& values) {
  if (values.rows < 2)
    throw ValidationError("zscore_by_window: need at least 2 nodes per column");
  ZscoreResult res;
  res.z = Matrix(values.rows, values.cols);
  res.flat_col.assign(static_cast<std::size_t>(values.cols), 0);
  for (int j = 0; j < values.cols; ++j) {
    double mean = 0.0;
    for (int i = 0; i < values.rows; ++i) mean += values(i, j);
    mean /= values.rows;
    double var = 0.0;
    for (int i = 0; i < values.rows; ++i) {
      const double d = values(i, j) - mean;
      var += d * d;
    }
    const double sd = std::sqrt(var / values.rows);
    if (sd == 0.0) {
      res.flat_col[static_cast<std::size_t>(j)] = 1;  // column left at zero
      continue;
    }
    for (int i = 0; i < values.rows; ++i) res.z(i, j) = (values(i, j) - mean) / sd;
  }
  return res;
}

namespace {

PearsonResult pearson_defined(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<bool>& ok) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < ok.size(); ++i) {
    if (ok[i]) {
      xs.push_back(x[i]);
      ys.push_back(y[i]);
    }
  }
  return pearson(xs, ys);
}

}  // namespace

AnalyticsReport build_report(const std::vector<Matrix>& embeddings, const Matrix& topo_avg,
                             MobilityMode mode) {
  if (embeddings.empty()) throw ValidationError("build_report: empty embedding sequence");
  const int n = embeddings.front().rows;
  const int d = embeddings.front().cols;
  const int t_count = static_cast<int>(embeddings.size());
  for (const auto& u : embeddings) {
    if (u.rows != n || u.cols != d)
      throw ValidationError("build_report: embedding shapes differ across windows");
  }
  if (topo_avg.rows != n || topo_avg.cols != 5)
    throw ValidationError("build_report: topology averages must be n x 5");

  AnalyticsReport rep;
  rep.norm = Matrix(n, t_count);
  rep.nodes.assign(static_cast<std::size_t>(n), {});

#pragma omp parallel for schedule(static)
  for (int v = 0; v < n; ++v) {
    auto& stats = rep.nodes[static_cast<std::size_t>(v)];
    stats.node = v;
    for (int t = 0; t < t_count; ++t) {
      const double* row = embeddings[static_cast<std::size_t>(t)].row(v);
      double s = 0.0;
      for (int c = 0; c < d; ++c) s += row[c] * row[c];
      rep.norm(v, t) = std::sqrt(s);
    }
    const auto series = mobility_series(embeddings, v, mode);
    std::vector<double> dists;
    dists.reserve(series.size());
    for (const auto& e : series) {
      dists.push_back(e.distance);
      stats.degenerate = stats.degenerate || e.degenerate;
    }
    stats.avg_cosdist = dists.empty() ? 0.0 : mean_of(dists);
    stats.cv_cosdist = cv(dists);
    std::vector<double> norms(rep.norm.row(v), rep.norm.row(v) + t_count);
    stats.avg_norm = mean_of(norms);
    stats.cv_norm = cv(norms);
    stats.high_mobility = stats.cv_cosdist.defined && stats.cv_cosdist.value > kHighCvThreshold;
    stats.high_norm_cv = stats.cv_norm.defined && stats.cv_norm.value > kHighCvThreshold;
  }

  rep.norm_zscore = zscore_by_window(rep.norm);

  rep.node_pearson = Matrix(n, n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    rep.node_pearson(i, i) = 1.0;
    const std::span<const double> xi(rep.norm.row(i), static_cast<std::size_t>(t_count));
    for (int j = i + 1; j < n; ++j) {
      const std::span<const double> xj(rep.norm.row(j), static_cast<std::size_t>(t_count));
      const auto pr = pearson(xi, xj);
      const double val = pr.defined ? pr.r : std::numeric_limits<double>::quiet_NaN();
      rep.node_pearson(i, j) = val;
      rep.node_pearson(j, i) = val;
    }
  }

  // per-node aggregates as correlation inputs
  std::vector<double> avg_cos(static_cast<std::size_t>(n)), cv_cos(static_cast<std::size_t>(n)),
      avg_nm(static_cast<std::size_t>(n)), cv_nm(static_cast<std::size_t>(n));
  std::vector<bool> cos_ok(static_cast<std::size_t>(n)), nm_ok(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& s = rep.nodes[static_cast<std::size_t>(v)];
    avg_cos[static_cast<std::size_t>(v)] = s.avg_cosdist;
    cv_cos[static_cast<std::size_t>(v)] = s.cv_cosdist.value;
    avg_nm[static_cast<std::size_t>(v)] = s.avg_norm;
    cv_nm[static_cast<std::size_t>(v)] = s.cv_norm.value;
    cos_ok[static_cast<std::size_t>(v)] = s.cv_cosdist.defined;
    nm_ok[static_cast<std::size_t>(v)] = s.cv_norm.defined;
  }
  rep.embedding_pairs = {
      {"avg_cosine_distance", "cv_cosine_distance", pearson_defined(avg_cos, cv_cos, cos_ok)},
      {"avg_cosine_distance", "cv_vector_norm", pearson_defined(avg_cos, cv_nm, nm_ok)},
      {"avg_vector_norm", "cv_cosine_distance", pearson_defined(avg_nm, cv_cos, cos_ok)},
      {"avg_vector_norm", "cv_vector_norm", pearson_defined(avg_nm, cv_nm, nm_ok)},
  };

  const char* topo_names[5] = {"avg_degree", "avg_betweenness", "avg_closeness",
                               "avg_eigenvector", "avg_clustering"};
  std::vector<bool> all_ok(static_cast<std::size_t>(n), true);
  for (int c = 0; c < 5; ++c) {
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) col[static_cast<std::size_t>(v)] = topo_avg(v, c);
    rep.topology_pairs.push_back(
        {"avg_cosine_distance", topo_names[c], pearson_defined(avg_cos, col, all_ok)});
  }
  for (int c = 0; c < 5; ++c) {
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) col[static_cast<std::size_t>(v)] = topo_avg(v, c);
    rep.topology_pairs.push_back(
        {"avg_vector_norm", topo_names[c], pearson_defined(avg_nm, col, all_ok)});
  }
  return rep;
}

}  // namespace mobembed
