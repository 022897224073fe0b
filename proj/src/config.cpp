#include "mobembed/config.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "mobembed/errors.hpp"

namespace mobembed {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.contains(key))
      throw ValidationError("config: unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void get_to(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) obj.at(key).get_to(out);
}

void parse_trace(const json& j, TraceConfig& t, bool& trace_seed_set) {
  reject_unknown(j, {"n_nodes", "n_groups", "sim_duration_s", "k_mix", "grid_rows", "grid_cols",
                     "cell_side_m", "alpha_gmt", "beta_gmt_s", "gmt_min_s", "alpha_dur",
                     "beta_dur_s", "dur_min_s", "alpha_size", "beta_size", "social",
                     "attendance", "seed"},
                 "trace");
  get_to(j, "n_nodes", t.n_nodes);
  get_to(j, "n_groups", t.n_groups);
  get_to(j, "sim_duration_s", t.sim_duration_s);
  if (j.contains("k_mix")) {
    t.k_mix.clear();
    for (const auto& e : j.at("k_mix")) {
      reject_unknown(e, {"period_s", "fraction"}, "trace.k_mix");
      KMixEntry entry;
      e.at("period_s").get_to(entry.period_s);
      e.at("fraction").get_to(entry.fraction);
      t.k_mix.push_back(entry);
    }
  }
  get_to(j, "grid_rows", t.grid_rows);
  get_to(j, "grid_cols", t.grid_cols);
  get_to(j, "cell_side_m", t.cell_side_m);
  get_to(j, "alpha_gmt", t.alpha_gmt);
  get_to(j, "beta_gmt_s", t.beta_gmt_s);
  get_to(j, "gmt_min_s", t.gmt_min_s);
  get_to(j, "alpha_dur", t.alpha_dur);
  get_to(j, "beta_dur_s", t.beta_dur_s);
  get_to(j, "dur_min_s", t.dur_min_s);
  get_to(j, "alpha_size", t.alpha_size);
  get_to(j, "beta_size", t.beta_size);
  if (j.contains("social")) {
    const auto& s = j.at("social");
    reject_unknown(s, {"mean_cluster_size", "size_shape", "p_in", "p_out"}, "trace.social");
    get_to(s, "mean_cluster_size", t.social.mean_cluster_size);
    get_to(s, "size_shape", t.social.size_shape);
    get_to(s, "p_in", t.social.p_in);
    get_to(s, "p_out", t.social.p_out);
  }
  if (j.contains("attendance")) {
    const auto& a = j.at("attendance");
    reject_unknown(a, {"p_base", "p_social"}, "trace.attendance");
    get_to(a, "p_base", t.attendance.p_base);
    get_to(a, "p_social", t.attendance.p_social);
  }
  if (j.contains("seed")) {
    j.at("seed").get_to(t.seed);
    trace_seed_set = true;
  }
}

}  // namespace

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("config: " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config: top level must be an object");

  PipelineConfig cfg;
  reject_unknown(j, {"seed", "out_dir", "threads", "trace", "graphs", "walks", "embed",
                     "analyze", "dump_ppmi"},
                 "top level");
  get_to(j, "seed", cfg.seed);
  get_to(j, "out_dir", cfg.out_dir);
  get_to(j, "threads", cfg.threads);
  get_to(j, "dump_ppmi", cfg.dump_ppmi);

  bool trace_seed_set = false;
  if (j.contains("trace")) parse_trace(j.at("trace"), cfg.trace, trace_seed_set);
  cfg.trace_seed_explicit = trace_seed_set;
  if (!trace_seed_set) cfg.trace.seed = cfg.seed;

  if (j.contains("graphs")) {
    const auto& g = j.at("graphs");
    reject_unknown(g, {"window_s", "contact_radius_m", "min_contact_s"}, "graphs");
    get_to(g, "window_s", cfg.graphs.window_s);
    get_to(g, "contact_radius_m", cfg.graphs.contact_radius_m);
    get_to(g, "min_contact_s", cfg.graphs.min_contact_s);
  }
  if (j.contains("walks")) {
    const auto& w = j.at("walks");
    reject_unknown(w, {"nw", "wl", "p", "q"}, "walks");
    get_to(w, "nw", cfg.walks.nw);
    get_to(w, "wl", cfg.walks.wl);
    get_to(w, "p", cfg.walks.p);
    get_to(w, "q", cfg.walks.q);
  }
  if (j.contains("embed")) {
    const auto& e = j.at("embed");
    reject_unknown(e, {"d", "lambda", "tau", "context_radius", "init_step", "tol_rel",
                       "max_sweeps"},
                   "embed");
    get_to(e, "d", cfg.embed.d);
    get_to(e, "lambda", cfg.embed.lambda);
    get_to(e, "tau", cfg.embed.tau);
    get_to(e, "context_radius", cfg.embed.context_radius);
    get_to(e, "init_step", cfg.embed.init_step);
    get_to(e, "tol_rel", cfg.embed.tol_rel);
    get_to(e, "max_sweeps", cfg.embed.max_sweeps);
  }
  if (j.contains("analyze")) {
    const auto& a = j.at("analyze");
    reject_unknown(a, {"mobility_mode"}, "analyze");
    if (a.contains("mobility_mode")) {
      const auto mode = a.at("mobility_mode").get<std::string>();
      if (mode == "forward") {
        cfg.analyze.mode = MobilityMode::forward_all_pairs;
      } else if (mode == "consecutive") {
        cfg.analyze.mode = MobilityMode::consecutive;
      } else {
        throw ValidationError("config: analyze.mobility_mode must be 'forward' or 'consecutive'");
      }
    }
  }
  return cfg;
}

std::vector<std::string> validate(const PipelineConfig& cfg) {
  std::vector<std::string> bad = validate(cfg.trace);
  auto req = [&bad](bool ok, const char* msg) {
    if (!ok) bad.emplace_back(msg);
  };
  req(cfg.graphs.window_s > 0.0, "graphs.window_s must be > 0");
  req(cfg.graphs.contact_radius_m > 0.0, "graphs.contact_radius_m must be > 0");
  req(cfg.graphs.min_contact_s >= 0.0, "graphs.min_contact_s must be >= 0");
  req(cfg.walks.nw >= 1, "walks.nw must be >= 1");
  req(cfg.walks.wl >= 2, "walks.wl must be >= 2");
  req(cfg.walks.p > 0.0, "walks.p must be > 0");
  req(cfg.walks.q > 0.0, "walks.q must be > 0");
  req(cfg.embed.d >= 1, "embed.d must be >= 1");
  req(cfg.embed.lambda >= 0.0, "embed.lambda must be >= 0");
  req(cfg.embed.tau >= 0.0, "embed.tau must be >= 0");
  req(cfg.embed.context_radius >= 1, "embed.context_radius must be >= 1");
  req(cfg.embed.init_step > 0.0, "embed.init_step must be > 0");
  req(cfg.embed.tol_rel > 0.0, "embed.tol_rel must be > 0");
  req(cfg.embed.max_sweeps >= 1, "embed.max_sweeps must be >= 1");
  req(cfg.threads >= 0, "threads must be >= 0");
  req(!cfg.out_dir.empty(), "out_dir must not be empty");
  if (!cfg.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    const auto probe = std::filesystem::path(cfg.out_dir) / ".write_probe";
    std::ofstream test(probe);
    if (ec || !test) {
      bad.push_back("out_dir is not writable: " + cfg.out_dir);
    } else {
      test.close();
      std::filesystem::remove(probe, ec);
    }
  }
  return bad;
}

PipelineConfig resolved(const PipelineConfig& cfg) {
  PipelineConfig r = cfg;
  if (cfg.seed_overridden || !cfg.trace_seed_explicit) r.trace.seed = cfg.seed;
  r.walks.seed = cfg.seed;
  r.embed.seed = cfg.seed;
  return r;
}

namespace {

json science_json(const PipelineConfig& cfg) {
  const PipelineConfig r = resolved(cfg);
  json j;
  j["seed"] = r.seed;
  j["dump_ppmi"] = r.dump_ppmi;
  j["trace"] = {{"n_nodes", r.trace.n_nodes},
                {"n_groups", r.trace.n_groups},
                {"sim_duration_s", r.trace.sim_duration_s},
                {"grid_rows", r.trace.grid_rows},
                {"grid_cols", r.trace.grid_cols},
                {"cell_side_m", r.trace.cell_side_m},
                {"alpha_gmt", r.trace.alpha_gmt},
                {"beta_gmt_s", r.trace.beta_gmt_s},
                {"gmt_min_s", r.trace.gmt_min_s},
                {"alpha_dur", r.trace.alpha_dur},
                {"beta_dur_s", r.trace.beta_dur_s},
                {"dur_min_s", r.trace.dur_min_s},
                {"alpha_size", r.trace.alpha_size},
                {"beta_size", r.trace.beta_size},
                {"seed", r.trace.seed}};
  json mix = json::array();
  for (const auto& e : r.trace.k_mix) mix.push_back({{"period_s", e.period_s}, {"fraction", e.fraction}});
  j["trace"]["k_mix"] = mix;
  j["trace"]["social"] = {{"mean_cluster_size", r.trace.social.mean_cluster_size},
                          {"size_shape", r.trace.social.size_shape},
                          {"p_in", r.trace.social.p_in},
                          {"p_out", r.trace.social.p_out}};
  j["trace"]["attendance"] = {{"p_base", r.trace.attendance.p_base},
                              {"p_social", r.trace.attendance.p_social}};
  j["graphs"] = {{"window_s", r.graphs.window_s},
                 {"contact_radius_m", r.graphs.contact_radius_m},
                 {"min_contact_s", r.graphs.min_contact_s}};
  j["walks"] = {{"nw", r.walks.nw}, {"wl", r.walks.wl}, {"p", r.walks.p}, {"q", r.walks.q}};
  j["embed"] = {{"d", r.embed.d},
                {"lambda", r.embed.lambda},
                {"tau", r.embed.tau},
                {"context_radius", r.embed.context_radius},
                {"init_step", r.embed.init_step},
                {"tol_rel", r.embed.tol_rel},
                {"max_sweeps", r.embed.max_sweeps}};
  j["analyze"] = {
      {"mobility_mode",
       r.analyze.mode == MobilityMode::forward_all_pairs ? "forward" : "consecutive"}};
  return j;
}

}  // namespace

std::string canonical_json(const PipelineConfig& cfg) { return science_json(cfg).dump(); }

std::string config_to_json(const PipelineConfig& cfg) {
  json j = science_json(cfg);
  j["out_dir"] = cfg.out_dir;
  j["threads"] = cfg.threads;
  return j.dump(2) + "\n";
}

}  // namespace mobembed
