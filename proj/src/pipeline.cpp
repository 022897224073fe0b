#include "mobembed/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "mobembed/csv.hpp"
#include "mobembed/errors.hpp"
#include "mobembed/hash.hpp"
#include "mobembed/parallel.hpp"

namespace mobembed {

namespace fs = std::filesystem;
using nlohmann::json;

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::generate: return "generate";
    case Stage::graphs: return "graphs";
    case Stage::walks: return "walks";
    case Stage::embed: return "embed";
    case Stage::analyze: return "analyze";
  }
  return "?";
}

namespace {

struct StageResult {
  std::vector<std::string> inputs;   // basenames, relative to out_dir
  std::vector<std::string> outputs;
  std::vector<std::pair<std::string, std::string>> facts;  // headline stats
};

std::string path_in(const PipelineConfig& cfg, const std::string& name) {
  return (fs::path(cfg.out_dir) / name).string();
}

void require_input(const PipelineConfig& cfg, const std::string& name, const char* produced_by) {
  if (!fs::exists(path_in(cfg, name)))
    throw ValidationError(std::string("missing ") + name + " in " + cfg.out_dir + " - run `" +
                          kToolName + " " + produced_by + "` first");
}

json read_meta(const PipelineConfig& cfg, const std::string& name) {
  std::ifstream in(path_in(cfg, name));
  if (!in) throw ValidationError("cannot open " + name);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(name + ": " + e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PipelineError("cannot write " + path);
  out << text;
}

void write_manifest(const PipelineConfig& cfg, Stage stage, const StageResult& result) {
  json m;
  m["stage"] = stage_name(stage);
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  m["seed"] = cfg.seed;
  m["config_hash"] = "fnv1a64:" + hex64(fnv1a64(canonical_json(cfg)));
  json inputs = json::object();
  for (const auto& name : result.inputs)
    inputs[name] = "fnv1a64:" + hex64(hash_file(path_in(cfg, name)));
  json outputs = json::object();
  for (const auto& name : result.outputs)
    outputs[name] = "fnv1a64:" + hex64(hash_file(path_in(cfg, name)));
  m["inputs"] = inputs;
  m["outputs"] = outputs;
  write_text(path_in(cfg, std::string("manifest_") + stage_name(stage) + ".json"),
             m.dump(2) + "\n");
}

std::string walks_file(int window) { return "walks_" + std::to_string(window) + ".txt"; }
std::string emb_file(int window) { return "emb_" + std::to_string(window) + ".csv"; }

StageResult stage_generate(const PipelineConfig& cfg) {
  const auto result = generate_trace(cfg.trace);
  write_trace_csv(path_in(cfg, "trace.csv"), result.trace);
  write_meetings_csv(path_in(cfg, "meetings.csv"), result.meetings);
  std::size_t segments = 0;
  for (const auto& s : result.trace.segments) segments += s.size();
  StageResult r;
  r.outputs = {"trace.csv", "meetings.csv"};
  r.facts = {{"nodes", std::to_string(cfg.trace.n_nodes)},
             {"meetings", std::to_string(result.meetings.size())},
             {"segments", std::to_string(segments)}};
  return r;
}

StageResult stage_graphs(const PipelineConfig& cfg) {
  require_input(cfg, "trace.csv", "generate");
  const auto trace = read_trace_csv(path_in(cfg, "trace.csv"));
  const auto seq = build_graph_sequence(trace, cfg.graphs.window_s, cfg.graphs.contact_radius_m,
                                        cfg.graphs.min_contact_s);
  const auto table = topology_table(seq);
  write_edges_csv(path_in(cfg, "edges.csv"), seq);
  write_topology_csv(path_in(cfg, "topology.csv"), table);
  const int n_nodes = static_cast<int>(trace.segments.size());
  json meta;
  meta["n_nodes"] = n_nodes;
  meta["n_windows"] = static_cast<int>(seq.graphs.size());
  meta["window_s"] = seq.window_s;
  meta["truncated_last"] = seq.truncated_last;
  write_text(path_in(cfg, "graphs_meta.json"), meta.dump(2) + "\n");
  std::size_t edges = 0;
  for (const auto& g : seq.graphs) edges += g.edge_count();
  StageResult r;
  r.inputs = {"trace.csv"};
  r.outputs = {"edges.csv", "topology.csv", "graphs_meta.json"};
  r.facts = {{"windows", std::to_string(seq.graphs.size())},
             {"edges_total", std::to_string(edges)}};
  return r;
}

StageResult stage_walks(const PipelineConfig& cfg) {
  require_input(cfg, "edges.csv", "graphs");
  require_input(cfg, "graphs_meta.json", "graphs");
  const json meta = read_meta(cfg, "graphs_meta.json");
  const int n_nodes = meta.at("n_nodes").get<int>();
  const int n_windows = meta.at("n_windows").get<int>();
  const auto seq = read_edges_csv(path_in(cfg, "edges.csv"), n_nodes, n_windows,
                                  meta.at("window_s").get<double>(),
                                  meta.at("truncated_last").get<bool>());
  const auto corpora = sample_walks_sequence(seq, cfg.walks);
  StageResult r;
  r.inputs = {"edges.csv", "graphs_meta.json"};
  std::size_t total_walks = 0;
  for (const auto& corpus : corpora) {
    write_walks_txt(path_in(cfg, walks_file(corpus.window)), corpus);
    r.outputs.push_back(walks_file(corpus.window));
    total_walks += corpus.walks.size();
  }
  json wmeta;
  wmeta["n_nodes"] = n_nodes;
  wmeta["n_windows"] = n_windows;
  wmeta["nw"] = cfg.walks.nw;
  wmeta["wl"] = cfg.walks.wl;
  write_text(path_in(cfg, "walks_meta.json"), wmeta.dump(2) + "\n");
  r.outputs.push_back("walks_meta.json");
  r.facts = {{"walks_total", std::to_string(total_walks)}};
  return r;
}

StageResult stage_embed(const PipelineConfig& cfg) {
  require_input(cfg, "walks_meta.json", "walks");
  const json meta = read_meta(cfg, "walks_meta.json");
  const int n_nodes = meta.at("n_nodes").get<int>();
  const int n_windows = meta.at("n_windows").get<int>();
  StageResult r;
  r.inputs = {"walks_meta.json"};
  std::vector<WalkCorpus> corpora;
  corpora.reserve(static_cast<std::size_t>(n_windows));
  for (int w = 1; w <= n_windows; ++w) {
    require_input(cfg, walks_file(w), "walks");
    corpora.push_back(read_walks_txt(path_in(cfg, walks_file(w)), w, n_nodes));
    r.inputs.push_back(walks_file(w));
  }
  const auto ppmis = ppmi_sequence(corpora, n_nodes, cfg.embed.context_radius);
  const auto emb = fit(ppmi_matrices(ppmis), cfg.embed);
  for (int w = 1; w <= n_windows; ++w) {
    write_embedding_csv(path_in(cfg, emb_file(w)), emb.u[static_cast<std::size_t>(w) - 1]);
    r.outputs.push_back(emb_file(w));
  }
  write_loss_csv(path_in(cfg, "loss.csv"), emb.sweep_loss);
  r.outputs.push_back("loss.csv");
  if (cfg.dump_ppmi) {
    write_ppmi_csv(path_in(cfg, "ppmi.csv"), ppmis);
    r.outputs.push_back("ppmi.csv");
  }
  char loss_buf[64];
  std::snprintf(loss_buf, sizeof(loss_buf), "%.9g", emb.sweep_loss.back());
  r.facts = {{"sweeps", std::to_string(emb.sweeps)},
             {"converged", emb.converged ? "1" : "0"},
             {"final_loss", loss_buf}};
  return r;
}

StageResult stage_analyze(const PipelineConfig& cfg) {
  require_input(cfg, "topology.csv", "graphs");
  const auto topo = read_topology_csv(path_in(cfg, "topology.csv"));
  StageResult r;
  r.inputs = {"topology.csv"};
  std::vector<Matrix> embeddings;
  embeddings.reserve(static_cast<std::size_t>(topo.n_windows));
  for (int w = 1; w <= topo.n_windows; ++w) {
    require_input(cfg, emb_file(w), "embed");
    embeddings.push_back(read_embedding_csv(path_in(cfg, emb_file(w))));
    r.inputs.push_back(emb_file(w));
    if (embeddings.back().rows != topo.n_nodes)
      throw ValidationError(emb_file(w) + ": node universe differs from topology.csv");
  }
  const auto rep = build_report(embeddings, topo.node_averages, cfg.analyze.mode);
  write_node_stats_csv(path_in(cfg, "node_stats.csv"), rep);
  write_zscore_csv(path_in(cfg, "heatmap_norm_zscore.csv"), rep);
  write_node_pearson_csv(path_in(cfg, "pearson_nodes.csv"), rep);
  write_correlations_csv(path_in(cfg, "correlations.csv"), rep);
  r.outputs = {"node_stats.csv", "heatmap_norm_zscore.csv", "pearson_nodes.csv",
               "correlations.csv"};

  auto top5 = [&rep](auto key) {
    std::vector<int> idx(rep.nodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return key(rep.nodes[static_cast<std::size_t>(a)]) >
                                                key(rep.nodes[static_cast<std::size_t>(b)]); });
    std::string s;
    for (std::size_t i = 0; i < idx.size() && i < 5; ++i) {
      if (i) s += ' ';
      s += std::to_string(idx[i]);
    }
    return s;
  };
  r.facts = {{"top5_avg_norm", top5([](const NodeStats& s) { return s.avg_norm; })},
             {"top5_avg_cosdist", top5([](const NodeStats& s) { return s.avg_cosdist; })}};
  return r;
}

}  // namespace

void run_stage(Stage stage, const PipelineConfig& raw_cfg) {
  const PipelineConfig cfg = resolved(raw_cfg);
  const auto problems = validate(cfg);
  if (!problems.empty()) {
    std::string msg = "invalid config:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
  set_max_threads(cfg.threads);
  fs::create_directories(cfg.out_dir);

  const auto start = std::chrono::steady_clock::now();
  StageResult result;
  switch (stage) {
    case Stage::generate: result = stage_generate(cfg); break;
    case Stage::graphs: result = stage_graphs(cfg); break;
    case Stage::walks: result = stage_walks(cfg); break;
    case Stage::embed: result = stage_embed(cfg); break;
    case Stage::analyze: result = stage_analyze(cfg); break;
  }
  write_manifest(cfg, stage, result);
  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::string facts;
  for (const auto& [key, value] : result.facts) facts += " " + key + "=" + value;
  std::fprintf(stderr, "[%s] stage=%s wall_ms=%lld%s\n", kToolName, stage_name(stage),
               static_cast<long long>(wall_ms), facts.c_str());
}

void run_all(const PipelineConfig& cfg) {
  for (const Stage s :
       {Stage::generate, Stage::graphs, Stage::walks, Stage::embed, Stage::analyze}) {
    run_stage(s, cfg);
  }
}

}  // namespace mobembed
