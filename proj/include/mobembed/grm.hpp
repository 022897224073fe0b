#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mobembed/rng.hpp"
#include "mobembed/social.hpp"

namespace mobembed {

struct KMixEntry {
  double period_s = 0.0;  // regularity factor K
  double fraction = 0.0;
};

struct AttendanceParams {
  double p_base = 0.5;
  double p_social = 0.4;
};

// Group-meeting trace generator inputs. Defaults follow the reference
// scenario: 100 nodes, 500 groups, 87 days on a 30x30 grid of 50 m cells,
// heavy-tailed meeting gaps/durations and a Gaussian-partition social layer.
struct TraceConfig {
  int n_nodes = 100;
  int n_groups = 500;
  double sim_duration_s = 87.0 * 86400.0;
  std::vector<KMixEntry> k_mix{{86400.0, 0.70}, {7.0 * 86400.0, 0.15}, {21600.0, 0.15}};
  int grid_rows = 30;
  int grid_cols = 30;
  double cell_side_m = 50.0;
  double alpha_gmt = 3.0;
  double beta_gmt_s = 30.0 * 86400.0;
  double gmt_min_s = 3600.0;  // lower bound of the inter-meeting gap law
  double alpha_dur = 3.0;
  double beta_dur_s = 30.0 * 86400.0;
  double dur_min_s = 1800.0;  // lower bound of the duration law
  double alpha_size = 2.24;
  int beta_size = 30;
  SocialParams social;
  AttendanceParams attendance;
  std::uint64_t seed = 42;
};

// Collects every violated invariant; empty means the config is usable.
std::vector<std::string> validate(const TraceConfig& cfg);

struct MeetingEvent {
  int group = 0;
  int cell_row = 0;
  int cell_col = 0;
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<int> attendees;  // sorted node ids; empty until assigned
};

struct Segment {
  double t_start = 0.0;
  double t_end = 0.0;
  double x = 0.0;
  double y = 0.0;
};

// Piecewise-constant positions; each node's segments tile [0, duration_s].
struct PositionTrace {
  double duration_s = 0.0;
  std::vector<std::vector<Segment>> segments;  // per node
};

struct GroupSetup {
  double period_s = 0.0;       // K
  int cell_row = 0;            // fixed venue
  int cell_col = 0;
  std::vector<int> members;    // stable roster, sorted
};

// Draws K, venue and roster for every group (roster sizes from the group
// size law, members uniform without replacement).
std::vector<GroupSetup> setup_groups(const TraceConfig& cfg, Rng& rng);

// Meeting times for all groups, attendees left empty. Gaps are drawn from
// the gap law and snapped to the nearest positive multiple of the group's K;
// durations are capped at the gap to the next meeting and at sim end.
std::vector<MeetingEvent> schedule_meetings(const TraceConfig& cfg,
                                            const std::vector<GroupSetup>& groups,
                                            Rng& rng);

// Each roster member attends independently with probability
// p_base + p_social * (fraction of the member's social neighbors in the
// roster), clipped to [0,1]. Redraws until non-empty (16 tries), then falls
// back to the full roster.
void assign_attendees(MeetingEvent& event, const std::vector<int>& roster,
                      const SocialGraph& social, const AttendanceParams& att, Rng& rng);

struct TraceResult {
  PositionTrace trace;
  std::vector<MeetingEvent> meetings;  // sorted by (t_start, group)
  SocialGraph social;
};

// Full generation pass: deterministic for a given config (including seed).
TraceResult generate_trace(const TraceConfig& cfg);

}  // namespace mobembed
