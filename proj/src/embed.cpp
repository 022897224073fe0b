#include "mobembed/embed.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "mobembed/errors.hpp"
#include "mobembed/linalg.hpp"
#include "mobembed/rng.hpp"

namespace mobembed {

namespace {

struct Kernels {
  void (*gram)(const Matrix&, Matrix&);
  void (*matmul)(const Matrix&, const Matrix&, Matrix&);
  double (*frob_sq)(const Matrix&);
  double (*diff_frob_sq)(const Matrix&, const Matrix&);
};

constexpr Kernels kParallel{linalg::gram, linalg::matmul, linalg::frob_sq,
                            linalg::diff_frob_sq};
constexpr Kernels kSerial{linalg::serial::gram, linalg::serial::matmul, linalg::serial::frob_sq,
                          linalg::serial::diff_frob_sq};

void check_y_seq(const std::vector<Matrix>& y_seq) {
  if (y_seq.empty()) throw ValidationError("fit: empty matrix sequence");
  const int n = y_seq.front().rows;
  for (const auto& y : y_seq) {
    if (y.rows != n || y.cols != n)
      throw ValidationError("fit: all matrices must be square with a shared node universe");
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (y(i, j) != y(j, i)) throw ValidationError("fit: matrices must be symmetric");
      }
    }
  }
}

double objective_impl(const std::vector<Matrix>& y_seq, const std::vector<Matrix>& u_seq,
                      double lambda, double tau, const Kernels& k, Matrix& gram_buf) {
  double loss = 0.0;
  for (std::size_t t = 0; t < y_seq.size(); ++t) {
    k.gram(u_seq[t], gram_buf);
    loss += 0.5 * k.diff_frob_sq(gram_buf, y_seq[t]);
    loss += 0.5 * lambda * k.frob_sq(u_seq[t]);
    if (t > 0) loss += 0.5 * tau * k.diff_frob_sq(u_seq[t], u_seq[t - 1]);
  }
  return loss;
}

struct Workspace {
  Matrix gram;   // n x n
  Matrix resid;  // n x n
  Matrix ru;     // n x d
  Matrix grad;   // n x d
  Matrix cand;   // n x d
};

double local_loss(const Matrix& u, const Matrix& y, const Matrix* u_prev, const Matrix* u_next,
                  double lambda, double tau, const Kernels& k, Matrix& gram_buf) {
  k.gram(u, gram_buf);
  double loss = 0.5 * k.diff_frob_sq(gram_buf, y) + 0.5 * lambda * k.frob_sq(u);
  if (u_prev) loss += 0.5 * tau * k.diff_frob_sq(u, *u_prev);
  if (u_next) loss += 0.5 * tau * k.diff_frob_sq(*u_next, u);
  return loss;
}

// One line-searched gradient step on window t holding the other windows fixed.
void update_window(std::vector<Matrix>& u_seq, const std::vector<Matrix>& y_seq, std::size_t t,
                   const EmbedOptions& opt, const Kernels& k, Workspace& ws) {
  const Matrix& y = y_seq[t];
  Matrix& u = u_seq[t];
  const Matrix* u_prev = t > 0 ? &u_seq[t - 1] : nullptr;
  const Matrix* u_next = t + 1 < u_seq.size() ? &u_seq[t + 1] : nullptr;

  const double l0 = local_loss(u, y, u_prev, u_next, opt.lambda, opt.tau, k, ws.gram);

  // gradient: 2*(U U^T - Y)*U + lambda*U + tau*((U - U_prev) + (U - U_next));
  // U U^T and Y are symmetric, so the symmetrized residual equals the residual
  if (!ws.resid.same_shape(ws.gram)) ws.resid = Matrix(y.rows, y.cols);
  for (std::size_t i = 0; i < ws.gram.a.size(); ++i) ws.resid.a[i] = ws.gram.a[i] - y.a[i];
  k.matmul(ws.resid, u, ws.ru);
  if (!ws.grad.same_shape(u)) ws.grad = Matrix(u.rows, u.cols);
  for (std::size_t i = 0; i < u.a.size(); ++i) {
    double gp = 2.0 * ws.ru.a[i] + opt.lambda * u.a[i];
    if (u_prev) gp += opt.tau * (u.a[i] - u_prev->a[i]);
    if (u_next) gp += opt.tau * (u.a[i] - u_next->a[i]);
    ws.grad.a[i] = gp;
  }

  double step = opt.init_step;
  if (!ws.cand.same_shape(u)) ws.cand = Matrix(u.rows, u.cols);
  for (int trial = 0; trial < 60; ++trial) {
    for (std::size_t i = 0; i < u.a.size(); ++i) ws.cand.a[i] = u.a[i] - step * ws.grad.a[i];
    const double l1 =
        local_loss(ws.cand, y, u_prev, u_next, opt.lambda, opt.tau, k, ws.gram);
    if (l1 < l0) {
      u.a.swap(ws.cand.a);
      return;
    }
    step *= 0.5;
  }
  // no decreasing step found: keep the current factor
}

}  // namespace

double objective(const std::vector<Matrix>& y_seq, const std::vector<Matrix>& u_seq,
                 double lambda, double tau) {
  if (y_seq.size() != u_seq.size())
    throw ValidationError("objective: sequence lengths differ");
  if (y_seq.empty()) throw ValidationError("objective: empty sequence");
  const int n = y_seq.front().rows;
  const int d = u_seq.front().cols;
  for (std::size_t t = 0; t < y_seq.size(); ++t) {
    if (y_seq[t].rows != n || y_seq[t].cols != n || u_seq[t].rows != n || u_seq[t].cols != d)
      throw ValidationError("objective: dimension mismatch at window " + std::to_string(t + 1));
  }
  Matrix gram_buf;
  return objective_impl(y_seq, u_seq, lambda, tau, kParallel, gram_buf);
}

EmbeddingSequence fit(const std::vector<Matrix>& y_seq, const EmbedOptions& opt) {
  check_y_seq(y_seq);
  const int n = y_seq.front().rows;
  if (opt.d < 1 || opt.d > n)
    throw ValidationError("fit: d must be in [1, n]");
  if (opt.lambda < 0.0 || opt.tau < 0.0)
    throw ValidationError("fit: lambda and tau must be >= 0");
  if (!(opt.init_step > 0.0) || !(opt.tol_rel > 0.0) || opt.max_sweeps < 1)
    throw ValidationError("fit: invalid solver options");

  const Kernels& k = opt.parallel ? kParallel : kSerial;
  const std::size_t t_count = y_seq.size();

  EmbeddingSequence emb;
  emb.n = n;
  emb.d = opt.d;
  emb.lambda = opt.lambda;
  emb.tau = opt.tau;
  emb.u.assign(t_count, Matrix(n, opt.d));
  Rng rng(stream_key(opt.seed, kStreamEmbed));
  const double scale = 1.0 / std::sqrt(static_cast<double>(opt.d));
  for (auto& u : emb.u) {
    for (double& x : u.a) x = rng.normal() * scale;
  }

  Workspace ws;
  double loss = objective_impl(y_seq, emb.u, opt.lambda, opt.tau, k, ws.gram);
  if (!std::isfinite(loss)) throw DivergenceError("fit: non-finite initial loss");
  emb.sweep_loss.push_back(loss);

  for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
    for (std::size_t t = 0; t < t_count; ++t) update_window(emb.u, y_seq, t, opt, k, ws);
    for (std::size_t t = t_count; t-- > 0;) update_window(emb.u, y_seq, t, opt, k, ws);

    const double next_loss = objective_impl(y_seq, emb.u, opt.lambda, opt.tau, k, ws.gram);
    if (!std::isfinite(next_loss)) throw DivergenceError("fit: non-finite loss");
    if (next_loss > loss * (1.0 + 1e-9) + 1e-12)
      throw DivergenceError("fit: loss increased across a sweep");
    emb.sweep_loss.push_back(next_loss);
    emb.sweeps = sweep;

    const double drop = loss - next_loss;
    loss = next_loss;
    if (loss == 0.0 || drop <= opt.tol_rel * std::max(loss, DBL_MIN)) {
      emb.converged = true;
      break;
    }
  }

  emb.window_data_loss.resize(t_count);
  for (std::size_t t = 0; t < t_count; ++t) {
    k.gram(emb.u[t], ws.gram);
    emb.window_data_loss[t] = 0.5 * k.diff_frob_sq(ws.gram, y_seq[t]);
  }
  return emb;
}

}  // namespace mobembed
