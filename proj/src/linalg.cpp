#include "mobembed/linalg.hpp"

#include <cassert>
#include <vector>

namespace mobembed::linalg {

void gram(const Matrix& u, Matrix& out) {
  const int n = u.rows;
  const int d = u.cols;
  if (static_cast<long long>(n) * n * d < kMinParallelWork) {
    serial::gram(u, out);
    return;
  }
  if (!(out.rows == n && out.cols == n)) out = Matrix(n, n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double* ui = u.row(i);
    double* oi = out.row(i);
    for (int j = 0; j < n; ++j) {
      const double* uj = u.row(j);
      double acc = 0.0;
      for (int k = 0; k < d; ++k) acc += ui[k] * uj[k];
      oi[j] = acc;
    }
  }
}

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.cols == b.rows);
  const int n = a.rows;
  const int m = b.cols;
  const int kk = a.cols;
  if (static_cast<long long>(n) * m * kk < kMinParallelWork) {
    serial::matmul(a, b, c);
    return;
  }
  if (!(c.rows == n && c.cols == m)) c = Matrix(n, m);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (int j = 0; j < m; ++j) ci[j] = 0.0;
    for (int k = 0; k < kk; ++k) {
      const double aik = ai[k];
      const double* bk = b.row(k);
      for (int j = 0; j < m; ++j) ci[j] += aik * bk[j];
    }
  }
}

double frob_sq(const Matrix& m) {
  if (static_cast<long long>(m.rows) * m.cols < kMinParallelWork) return serial::frob_sq(m);
  std::vector<double> partial(static_cast<std::size_t>(m.rows), 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m.rows; ++i) {
    const double* ri = m.row(i);
    double acc = 0.0;
    for (int j = 0; j < m.cols; ++j) acc += ri[j] * ri[j];
    partial[static_cast<std::size_t>(i)] = acc;
  }
  double total = 0.0;
  for (const double p : partial) total += p;
  return total;
}

double diff_frob_sq(const Matrix& a, const Matrix& b) {
  if (static_cast<long long>(a.rows) * a.cols < kMinParallelWork) return serial::diff_frob_sq(a, b);
  assert(a.rows == b.rows && a.cols == b.cols);
  std::vector<double> partial(static_cast<std::size_t>(a.rows), 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows; ++i) {
    const double* ra = a.row(i);
    const double* rb = b.row(i);
    double acc = 0.0;
    for (int j = 0; j < a.cols; ++j) {
      const double diff = ra[j] - rb[j];
      acc += diff * diff;
    }
    partial[static_cast<std::size_t>(i)] = acc;
  }
  double total = 0.0;
  for (const double p : partial) total += p;
  return total;
}

namespace serial {

void gram(const Matrix& u, Matrix& out) {
  const int n = u.rows;
  const int d = u.cols;
  if (!(out.rows == n && out.cols == n)) out = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    const double* ui = u.row(i);
    double* oi = out.row(i);
    for (int j = 0; j < n; ++j) {
      const double* uj = u.row(j);
      double acc = 0.0;
      for (int k = 0; k < d; ++k) acc += ui[k] * uj[k];
      oi[j] = acc;
    }
  }
}

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.cols == b.rows);
  const int n = a.rows;
  const int m = b.cols;
  const int kk = a.cols;
  if (!(c.rows == n && c.cols == m)) c = Matrix(n, m);
  for (int i = 0; i < n; ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (int j = 0; j < m; ++j) ci[j] = 0.0;
    for (int k = 0; k < kk; ++k) {
      const double aik = ai[k];
      const double* bk = b.row(k);
      for (int j = 0; j < m; ++j) ci[j] += aik * bk[j];
    }
  }
}

double frob_sq(const Matrix& m) {
  double total = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    const double* ri = m.row(i);
    double acc = 0.0;
    for (int j = 0; j < m.cols; ++j) acc += ri[j] * ri[j];
    total += acc;
  }
  return total;
}

double diff_frob_sq(const Matrix& a, const Matrix& b) {
  assert(a.rows == b.rows && a.cols == b.cols);
  double total = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    const double* ra = a.row(i);
    const double* rb = b.row(i);
    double acc = 0.0;
    for (int j = 0; j < a.cols; ++j) {
      const double diff = ra[j] - rb[j];
      acc += diff * diff;
    }
    total += acc;
  }
  return total;
}

}  // namespace serial

}  // namespace mobembed::linalg
