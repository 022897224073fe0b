#include "mobembed/grm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mobembed/errors.hpp"
#include "mobembed/powerlaw.hpp"

namespace mobembed {

std::vector<std::string> validate(const TraceConfig& cfg) {
  std::vector<std::string> bad;
  auto req = [&bad](bool ok, const char* msg) {
    if (!ok) bad.emplace_back(msg);
  };
  req(cfg.n_nodes > 0, "trace.n_nodes must be > 0");
  req(cfg.n_groups > 0, "trace.n_groups must be > 0");
  req(cfg.sim_duration_s > 0.0, "trace.sim_duration_s must be > 0");
  req(!cfg.k_mix.empty(), "trace.k_mix must not be empty");
  double frac_sum = 0.0;
  for (const auto& [period, fraction] : cfg.k_mix) {
    req(period > 0.0, "trace.k_mix period_s must be > 0");
    req(fraction >= 0.0 && fraction <= 1.0, "trace.k_mix fraction must be in [0,1]");
    frac_sum += fraction;
  }
  req(std::abs(frac_sum - 1.0) <= 1e-9, "trace.k_mix fractions must sum to 1");
  req(cfg.grid_rows > 0, "trace.grid_rows must be > 0");
  req(cfg.grid_cols > 0, "trace.grid_cols must be > 0");
  req(cfg.cell_side_m > 0.0, "trace.cell_side_m must be > 0");
  req(cfg.alpha_gmt > 1.0, "trace.alpha_gmt must be > 1");
  req(cfg.beta_gmt_s > 0.0, "trace.beta_gmt_s must be > 0");
  req(cfg.gmt_min_s > 0.0, "trace.gmt_min_s must be > 0");
  req(cfg.alpha_dur > 1.0, "trace.alpha_dur must be > 1");
  req(cfg.beta_dur_s > 0.0, "trace.beta_dur_s must be > 0");
  req(cfg.dur_min_s > 0.0, "trace.dur_min_s must be > 0");
  req(cfg.alpha_size > 1.0, "trace.alpha_size must be > 1");
  req(cfg.beta_size >= 2, "trace.beta_size must be >= 2");
  req(cfg.social.mean_cluster_size >= 1.0, "trace.social.mean_cluster_size must be >= 1");
  req(cfg.social.size_shape > 0.0, "trace.social.size_shape must be > 0");
  req(cfg.social.p_in >= 0.0 && cfg.social.p_in <= 1.0, "trace.social.p_in must be in [0,1]");
  req(cfg.social.p_out >= 0.0 && cfg.social.p_out <= 1.0, "trace.social.p_out must be in [0,1]");
  req(cfg.attendance.p_base >= 0.0 && cfg.attendance.p_base <= 1.0,
      "trace.attendance.p_base must be in [0,1]");
  req(cfg.attendance.p_social >= 0.0 && cfg.attendance.p_social <= 1.0,
      "trace.attendance.p_social must be in [0,1]");
  return bad;
}

namespace {

double pick_period(const std::vector<KMixEntry>& mix, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (const auto& [period, fraction] : mix) {
    acc += fraction;
    if (u < acc) return period;
  }
  return mix.back().period_s;
}

// nearest positive multiple of K, never below K
double snap_to_period(double gap, double period) {
  const auto mult = std::max<long long>(1, std::llround(gap / period));
  return static_cast<double>(mult) * period;
}

}  // namespace

std::vector<GroupSetup> setup_groups(const TraceConfig& cfg, Rng& rng) {
  const GroupSizeDist size_dist(cfg.alpha_size, cfg.beta_size);
  std::vector<int> ids(static_cast<std::size_t>(cfg.n_nodes));
  std::iota(ids.begin(), ids.end(), 0);

  std::vector<GroupSetup> groups(static_cast<std::size_t>(cfg.n_groups));
  for (auto& g : groups) {
    g.period_s = pick_period(cfg.k_mix, rng);
    g.cell_row = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(cfg.grid_rows)));
    g.cell_col = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(cfg.grid_cols)));
    const int size = std::min(size_dist.sample(rng), cfg.n_nodes);
    // partial Fisher-Yates: uniform roster without replacement
    for (int i = 0; i < size; ++i) {
      const auto j = i + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(cfg.n_nodes - i)));
      std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    g.members.assign(ids.begin(), ids.begin() + size);
    std::sort(g.members.begin(), g.members.end());
  }
  return groups;
}

std::vector<MeetingEvent> schedule_meetings(const TraceConfig& cfg,
                                            const std::vector<GroupSetup>& groups,
                                            Rng& rng) {
  std::vector<MeetingEvent> meetings;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    // starts first: the duration cap needs the gap to the next meeting
    std::vector<double> starts;
    double t = 0.0;
    for (;;) {
      const double gap = snap_to_period(
          sample_trunc_powerlaw(cfg.alpha_gmt, cfg.beta_gmt_s, cfg.gmt_min_s, rng), g.period_s);
      t += gap;
      if (t >= cfg.sim_duration_s) break;
      starts.push_back(t);
    }
    for (std::size_t k = 0; k < starts.size(); ++k) {
      double dur = sample_trunc_powerlaw(cfg.alpha_dur, cfg.beta_dur_s, cfg.dur_min_s, rng);
      if (k + 1 < starts.size()) dur = std::min(dur, starts[k + 1] - starts[k]);
      MeetingEvent ev;
      ev.group = static_cast<int>(gi);
      ev.cell_row = g.cell_row;
      ev.cell_col = g.cell_col;
      ev.t_start = starts[k];
      ev.t_end = std::min(starts[k] + dur, cfg.sim_duration_s);
      meetings.push_back(std::move(ev));
    }
  }
  return meetings;
}

void assign_attendees(MeetingEvent& event, const std::vector<int>& roster,
                      const SocialGraph& social, const AttendanceParams& att, Rng& rng) {
  event.attendees.clear();
  for (int attempt = 0; attempt < 16; ++attempt) {
    event.attendees.clear();
    for (const int m : roster) {
      double frac = 0.0;
      if (social.degree(m) > 0) {
        int in_roster = 0;
        for (const int nb : social.adj[m]) {
          if (std::binary_search(roster.begin(), roster.end(), nb)) ++in_roster;
        }
        frac = static_cast<double>(in_roster) / social.degree(m);
      }
      const double p = std::clamp(att.p_base + att.p_social * frac, 0.0, 1.0);
      if (rng.bernoulli(p)) event.attendees.push_back(m);
    }
    if (!event.attendees.empty()) return;
  }
  event.attendees = roster;
}

TraceResult generate_trace(const TraceConfig& cfg) {
  const auto problems = validate(cfg);
  if (!problems.empty()) {
    std::string msg = "invalid trace config:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }

  Rng rng(stream_key(cfg.seed, kStreamTrace));
  TraceResult out;
  out.social = build_social_graph(cfg.n_nodes, cfg.social, rng);

  const auto groups = setup_groups(cfg, rng);
  out.meetings = schedule_meetings(cfg, groups, rng);
  for (auto& ev : out.meetings) {
    assign_attendees(ev, groups[static_cast<std::size_t>(ev.group)].members, out.social,
                     cfg.attendance, rng);
  }
  std::stable_sort(out.meetings.begin(), out.meetings.end(),
                   [](const MeetingEvent& a, const MeetingEvent& b) {
                     if (a.t_start != b.t_start) return a.t_start < b.t_start;
                     return a.group < b.group;
                   });

  // home cells
  std::vector<double> home_x(static_cast<std::size_t>(cfg.n_nodes));
  std::vector<double> home_y(static_cast<std::size_t>(cfg.n_nodes));
  for (int v = 0; v < cfg.n_nodes; ++v) {
    const auto row = rng.uniform_index(static_cast<std::uint64_t>(cfg.grid_rows));
    const auto col = rng.uniform_index(static_cast<std::uint64_t>(cfg.grid_cols));
    home_x[static_cast<std::size_t>(v)] = (static_cast<double>(col) + 0.5) * cfg.cell_side_m;
    home_y[static_cast<std::size_t>(v)] = (static_cast<double>(row) + 0.5) * cfg.cell_side_m;
  }

  // per-node attended meetings, already in (t_start, group) order
  std::vector<std::vector<const MeetingEvent*>> attended(static_cast<std::size_t>(cfg.n_nodes));
  for (const auto& ev : out.meetings) {
    for (const int v : ev.attendees) attended[static_cast<std::size_t>(v)].push_back(&ev);
  }

  out.trace.duration_s = cfg.sim_duration_s;
  out.trace.segments.resize(static_cast<std::size_t>(cfg.n_nodes));
  for (int v = 0; v < cfg.n_nodes; ++v) {
    auto& segs = out.trace.segments[static_cast<std::size_t>(v)];
    const double hx = home_x[static_cast<std::size_t>(v)];
    const double hy = home_y[static_cast<std::size_t>(v)];
    double cur = 0.0;
    for (const MeetingEvent* ev : attended[static_cast<std::size_t>(v)]) {
      if (ev->t_start < cur) continue;  // overlap: earliest start wins
      // uniform position inside the venue cell, drawn per (node, meeting)
      const double px = (static_cast<double>(ev->cell_col) + rng.uniform()) * cfg.cell_side_m;
      const double py = (static_cast<double>(ev->cell_row) + rng.uniform()) * cfg.cell_side_m;
      if (ev->t_start > cur) segs.push_back({cur, ev->t_start, hx, hy});
      segs.push_back({ev->t_start, ev->t_end, px, py});
      cur = ev->t_end;
    }
    if (cur < cfg.sim_duration_s) segs.push_back({cur, cfg.sim_duration_s, hx, hy});
  }
  return out;
}

}  // namespace mobembed
