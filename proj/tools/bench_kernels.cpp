// Times the OpenMP kernels against their serial references on a synthetic
// workload and checks that both produce identical output.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "mobembed/cooccur.hpp"
#include "mobembed/embed.hpp"
#include "mobembed/graph.hpp"
#include "mobembed/grm.hpp"
#include "mobembed/linalg.hpp"
#include "mobembed/parallel.hpp"
#include "mobembed/topology.hpp"
#include "mobembed/walks.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// warm once (thread pool, page faults), then best of three
template <typename F>
double time_ms(F&& fn) {
  fn();
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, ms_since(start));
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-24s %10.1f %10.1f %8.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, identical ? "identical" : "DIFFER");
}

bool same_graphs(const mobembed::GraphSequence& a, const mobembed::GraphSequence& b) {
  if (a.graphs.size() != b.graphs.size()) return false;
  for (std::size_t t = 0; t < a.graphs.size(); ++t) {
    if (a.graphs[t].adj != b.graphs[t].adj) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int n_nodes = 100;
  int days = 30;
  int d = 64;
  int sweeps = 8;
  int threads = 0;
  app.add_option("--nodes", n_nodes, "trace nodes");
  app.add_option("--days", days, "trace days");
  app.add_option("--d", d, "embedding dimension");
  app.add_option("--sweeps", sweeps, "fit sweeps to time");
  app.add_option("--threads", threads, "OpenMP worker cap");
  CLI11_PARSE(app, argc, argv);

  mobembed::set_max_threads(threads);
  std::printf("threads=%d nodes=%d days=%d d=%d\n\n", mobembed::max_threads(), n_nodes, days, d);
  std::printf("%-24s %10s %10s %9s\n", "kernel", "serial_ms", "omp_ms", "speedup");

  mobembed::TraceConfig tc;
  tc.n_nodes = n_nodes;
  tc.n_groups = n_nodes * 4;
  tc.sim_duration_s = days * 86400.0;
  tc.grid_rows = 12;
  tc.grid_cols = 12;
  tc.beta_size = 10;
  tc.seed = 7;
  const auto trace = mobembed::generate_trace(tc).trace;

  mobembed::GraphSequence seq_s, seq_p;
  {
    const double t_serial =
        time_ms([&] { seq_s = mobembed::serial::build_graph_sequence(trace, 86400.0, 100.0); });
    const double t_par =
        time_ms([&] { seq_p = mobembed::build_graph_sequence(trace, 86400.0, 100.0); });
    report("build_graph_sequence", t_serial, t_par, same_graphs(seq_s, seq_p));
  }

  {
    std::vector<mobembed::GraphTopology> tab_s, tab_p;
    const double t_serial = time_ms([&] { tab_s = mobembed::serial::topology_table(seq_s); });
    const double t_par = time_ms([&] { tab_p = mobembed::topology_table(seq_s); });
    bool same = tab_s.size() == tab_p.size();
    for (std::size_t t = 0; same && t < tab_s.size(); ++t) {
      same = tab_s[t].degree == tab_p[t].degree && tab_s[t].betweenness == tab_p[t].betweenness &&
             tab_s[t].closeness == tab_p[t].closeness &&
             tab_s[t].eigenvector == tab_p[t].eigenvector &&
             tab_s[t].clustering == tab_p[t].clustering;
    }
    report("topology_table", t_serial, t_par, same);
  }

  mobembed::WalkParams wp;
  wp.nw = 16;  // oversampled to give the timer something to chew on
  wp.wl = 40;
  wp.seed = 7;
  std::vector<mobembed::WalkCorpus> corpora_s, corpora_p;
  {
    const double t_serial =
        time_ms([&] { corpora_s = mobembed::serial::sample_walks_sequence(seq_s, wp); });
    const double t_par = time_ms([&] { corpora_p = mobembed::sample_walks_sequence(seq_s, wp); });
    bool same = corpora_s.size() == corpora_p.size();
    for (std::size_t t = 0; same && t < corpora_s.size(); ++t)
      same = corpora_s[t].walks == corpora_p[t].walks;
    report("sample_walks_sequence", t_serial, t_par, same);
  }

  std::vector<mobembed::PpmiMatrix> ppmi_s, ppmi_p;
  {
    const double t_serial =
        time_ms([&] { ppmi_s = mobembed::serial::ppmi_sequence(corpora_s, n_nodes, 5); });
    const double t_par = time_ms([&] { ppmi_p = mobembed::ppmi_sequence(corpora_s, n_nodes, 5); });
    bool same = ppmi_s.size() == ppmi_p.size();
    for (std::size_t t = 0; same && t < ppmi_s.size(); ++t) same = ppmi_s[t].y == ppmi_p[t].y;
    report("ppmi_sequence", t_serial, t_par, same);
  }

  {
    const auto y = mobembed::ppmi_matrices(ppmi_s);
    mobembed::EmbedOptions opt;
    opt.d = d;
    opt.lambda = 4.0;
    opt.tau = 2.0;
    opt.max_sweeps = sweeps;
    opt.tol_rel = 1e-300;  // run every sweep
    opt.seed = 7;
    mobembed::EmbeddingSequence emb_s, emb_p;
    opt.parallel = false;
    const double t_serial = time_ms([&] { emb_s = mobembed::fit(y, opt); });
    opt.parallel = true;
    const double t_par = time_ms([&] { emb_p = mobembed::fit(y, opt); });
    bool same = emb_s.sweep_loss == emb_p.sweep_loss && emb_s.u.size() == emb_p.u.size();
    for (std::size_t t = 0; same && t < emb_s.u.size(); ++t) same = emb_s.u[t] == emb_p.u[t];
    report("fit", t_serial, t_par, same);
  }

  {
    const int n = 600;
    mobembed::Matrix u(n, d);
    mobembed::Rng rng(3);
    for (double& x : u.a) x = rng.normal();
    mobembed::Matrix g_s, g_p;
    const double t_serial = time_ms([&] { mobembed::linalg::serial::gram(u, g_s); });
    const double t_par = time_ms([&] { mobembed::linalg::gram(u, g_p); });
    report("gram (600xd)", t_serial, t_par, g_s == g_p);
  }

  return 0;
}
