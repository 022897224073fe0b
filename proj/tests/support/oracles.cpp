#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  return adaptive(f, a, fa, b, fb, m, fm, simpson(a, fa, b, fb, fm), tol, 48);
}

namespace {

// integrate the density piecewise on a geometric grid so the heavy tail and
// the sharp head both get resolved
double tail_integral(const std::function<double(double)>& f, double x_min, double upper) {
  double total = 0.0;
  double lo = x_min;
  while (lo < upper) {
    const double hi = std::min(lo * 2.0, upper);
    total += integrate(f, lo, hi, 1e-13 * std::max(1.0, total));
    lo = hi;
  }
  return total;
}

}  // namespace

double trunc_powerlaw_mean(double alpha, double beta, double x_min) {
  const auto density = [&](double x) { return std::pow(x, -alpha) * std::exp(-x / beta); };
  const auto x_density = [&](double x) { return x * density(x); };
  const double upper = x_min + 120.0 * beta;  // exp(-120) tail is negligible
  return tail_integral(x_density, x_min, upper) / tail_integral(density, x_min, upper);
}

TruncPowerlawCdf::TruncPowerlawCdf(double alpha, double beta, double x_min, int knots) {
  const auto density = [&](double x) { return std::pow(x, -alpha) * std::exp(-x / beta); };
  const double upper = x_min + 120.0 * beta;
  const double ratio = std::pow(upper / x_min, 1.0 / (knots - 1));
  xs_.resize(static_cast<std::size_t>(knots));
  cdf_.resize(static_cast<std::size_t>(knots));
  xs_[0] = x_min;
  cdf_[0] = 0.0;
  for (int i = 1; i < knots; ++i) {
    xs_[static_cast<std::size_t>(i)] = xs_[static_cast<std::size_t>(i) - 1] * ratio;
    cdf_[static_cast<std::size_t>(i)] =
        cdf_[static_cast<std::size_t>(i) - 1] +
        integrate(density, xs_[static_cast<std::size_t>(i) - 1], xs_[static_cast<std::size_t>(i)],
                  1e-14);
  }
  const double total = cdf_.back();
  for (double& c : cdf_) c /= total;
}

double TruncPowerlawCdf::operator()(double x) const {
  if (x <= xs_.front()) return 0.0;
  if (x >= xs_.back()) return 1.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  const std::size_t lo = hi - 1;
  const double w = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return cdf_[lo] + w * (cdf_[hi] - cdf_[lo]);
}

std::vector<double> bf_clustering(const mobembed::Graph& g) {
  const int n = g.n;
  std::vector<double> cc(static_cast<std::size_t>(n), 0.0);
  for (int v = 0; v < n; ++v) {
    int k = 0;
    int tri = 0;
    for (int a = 0; a < n; ++a) {
      if (a == v || !g.has_edge(v, a)) continue;
      ++k;
      for (int b = a + 1; b < n; ++b) {
        if (b == v || !g.has_edge(v, b)) continue;
        if (g.has_edge(a, b)) ++tri;
      }
    }
    if (k >= 2) cc[static_cast<std::size_t>(v)] = 2.0 * tri / (static_cast<double>(k) * (k - 1));
  }
  return cc;
}

namespace {

// all-pairs BFS distances; -1 = unreachable
std::vector<std::vector<int>> all_dists(const mobembed::Graph& g) {
  const int n = g.n;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& ds = dist[static_cast<std::size_t>(s)];
    ds[static_cast<std::size_t>(s)] = 0;
    std::vector<int> frontier{s};
    int level = 0;
    while (!frontier.empty()) {
      ++level;
      std::vector<int> next;
      for (const int v : frontier) {
        for (const int w : g.adj[static_cast<std::size_t>(v)]) {
          if (ds[static_cast<std::size_t>(w)] < 0) {
            ds[static_cast<std::size_t>(w)] = level;
            next.push_back(w);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return dist;
}

// shortest-path counts sigma[s][v] by dynamic programming over distance layers
std::vector<std::vector<double>> path_counts(const mobembed::Graph& g,
                                             const std::vector<std::vector<int>>& dist) {
  const int n = g.n;
  std::vector<std::vector<double>> sigma(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int s = 0; s < n; ++s) {
    const auto& ds = dist[static_cast<std::size_t>(s)];
    auto& sg = sigma[static_cast<std::size_t>(s)];
    sg[static_cast<std::size_t>(s)] = 1.0;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return ds[static_cast<std::size_t>(a)] < ds[static_cast<std::size_t>(b)];
    });
    for (const int w : order) {
      if (w == s || ds[static_cast<std::size_t>(w)] < 0) continue;
      for (const int v : g.adj[static_cast<std::size_t>(w)]) {
        if (ds[static_cast<std::size_t>(v)] >= 0 &&
            ds[static_cast<std::size_t>(v)] + 1 == ds[static_cast<std::size_t>(w)]) {
          sg[static_cast<std::size_t>(w)] += sg[static_cast<std::size_t>(v)];
        }
      }
    }
  }
  return sigma;
}

}  // namespace

std::vector<double> bf_betweenness(const mobembed::Graph& g) {
  const int n = g.n;
  std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
  if (n < 3) return bc;
  const auto dist = all_dists(g);
  const auto sigma = path_counts(g, dist);
  for (int v = 0; v < n; ++v) {
    double acc = 0.0;
    for (int s = 0; s < n; ++s) {
      if (s == v) continue;
      for (int t = 0; t < n; ++t) {
        if (t == v || t == s) continue;
        const int dst = dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (dst < 0) continue;
        const int dsv = dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)];
        const int dvt = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
        if (dsv < 0 || dvt < 0 || dsv + dvt != dst) continue;
        acc += sigma[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] *
               sigma[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] /
               sigma[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      }
    }
    bc[static_cast<std::size_t>(v)] = acc / (static_cast<double>(n - 1) * (n - 2));
  }
  return bc;
}

std::vector<double> bf_closeness(const mobembed::Graph& g) {
  const int n = g.n;
  std::vector<double> cl(static_cast<std::size_t>(n), 0.0);
  if (n < 2) return cl;
  const auto dist = all_dists(g);
  for (int v = 0; v < n; ++v) {
    long long sum = 0;
    int reach = 0;
    for (int u = 0; u < n; ++u) {
      const int duv = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      if (u != v && duv >= 0) {
        sum += duv;
        ++reach;
      }
    }
    if (reach == 0) continue;
    const double c = static_cast<double>(reach);
    cl[static_cast<std::size_t>(v)] =
        (c / static_cast<double>(n - 1)) * (c / static_cast<double>(sum));
  }
  return cl;
}

JacobiEig jacobi_eigen(const mobembed::Matrix& sym) {
  const int n = sym.rows;
  mobembed::Matrix a = sym;
  std::vector<std::vector<double>> v(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          auto& vk = v[static_cast<std::size_t>(k)];
          const double vkp = vk[static_cast<std::size_t>(p)], vkq = vk[static_cast<std::size_t>(q)];
          vk[static_cast<std::size_t>(p)] = c * vkp - s * vkq;
          vk[static_cast<std::size_t>(q)] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
  JacobiEig out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  out.vectors.reserve(static_cast<std::size_t>(n));
  for (const int k : order) {
    out.eigenvalues.push_back(a(k, k));
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

mobembed::Matrix naive_cooccurrence(const mobembed::WalkCorpus& corpus, int n, int radius) {
  mobembed::Matrix counts(n, n);
  for (const auto& walk : corpus.walks) {
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i) {
      for (int j = 0; j < len; ++j) {
        if (i == j) continue;
        if (std::abs(i - j) > radius) continue;
        counts(walk[static_cast<std::size_t>(i)], walk[static_cast<std::size_t>(j)]) += 1.0;
      }
    }
  }
  return counts;
}

mobembed::Matrix naive_ppmi(const mobembed::Matrix& counts) {
  const int n = counts.rows;
  double total = 0.0;
  for (const double c : counts.a) total += c;
  mobembed::Matrix y(n, n);
  if (total == 0.0) return y;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (counts(i, j) <= 0.0) continue;
      double ci = 0.0, cj = 0.0;
      for (int k = 0; k < n; ++k) {
        ci += counts(i, k);
        cj += counts(j, k);
      }
      y(i, j) = std::max(0.0, std::log(counts(i, j) * total / (ci * cj)));
    }
  }
  return y;
}

double naive_objective(const std::vector<mobembed::Matrix>& y,
                       const std::vector<mobembed::Matrix>& u, double lambda, double tau) {
  double loss = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    const int n = y[t].rows;
    const int d = u[t].cols;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double uut = 0.0;
        for (int k = 0; k < d; ++k) uut += u[t](i, k) * u[t](j, k);
        const double diff = y[t](i, j) - uut;
        loss += 0.5 * diff * diff;
      }
    }
    for (const double x : u[t].a) loss += 0.5 * lambda * x * x;
    if (t > 0) {
      for (std::size_t i = 0; i < u[t].a.size(); ++i) {
        const double diff = u[t].a[i] - u[t - 1].a[i];
        loss += 0.5 * tau * diff * diff;
      }
    }
  }
  return loss;
}

mobembed::Graph random_graph(int n, double p, mobembed::Rng& rng) {
  mobembed::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace oracle
