#pragma once

#include <string>
#include <vector>

#include "mobembed/config.hpp"

namespace mobembed {

inline constexpr const char* kToolName = "mobembed";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Stage { generate, graphs, walks, embed, analyze };

const char* stage_name(Stage s);

// Runs one stage against the artifacts in cfg.out_dir. Validates the config
// and the stage inputs, writes the stage outputs plus a provenance manifest,
// and logs one summary line to stderr. Reruns on unchanged inputs are
// byte-identical.
void run_stage(Stage stage, const PipelineConfig& cfg);

// All five stages in order.
void run_all(const PipelineConfig& cfg);

}  // namespace mobembed
