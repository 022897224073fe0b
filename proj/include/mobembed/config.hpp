#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mobembed/embed.hpp"
#include "mobembed/grm.hpp"
#include "mobembed/metrics.hpp"
#include "mobembed/walks.hpp"

namespace mobembed {

struct GraphConfig {
  double window_s = 86400.0;
  double contact_radius_m = 100.0;
  double min_contact_s = 0.0;
};

struct AnalyzeConfig {
  MobilityMode mode = MobilityMode::forward_all_pairs;
};

struct PipelineConfig {
  TraceConfig trace;
  GraphConfig graphs;
  WalkParams walks;
  EmbedOptions embed;
  AnalyzeConfig analyze;
  std::string out_dir = "out";
  std::uint64_t seed = 42;
  bool seed_overridden = false;     // --seed beats an explicit trace.seed
  bool trace_seed_explicit = false; // config file set trace.seed on its own
  int threads = 0;                  // 0 = runtime default
  bool dump_ppmi = false;
};

// Parses the JSON config file over shipped defaults. Unknown keys are
// rejected so typos cannot silently fall back to defaults.
PipelineConfig load_config(const std::string& path);

// Collects every violated invariant; empty means runnable.
std::vector<std::string> validate(const PipelineConfig& cfg);

// cfg with the single pipeline seed pushed into each stage's RNG options
PipelineConfig resolved(const PipelineConfig& cfg);

// Canonical JSON of the science parameters (out_dir and threads excluded:
// they do not affect artifact bytes).
std::string canonical_json(const PipelineConfig& cfg);

std::string config_to_json(const PipelineConfig& cfg);

}  // namespace mobembed
