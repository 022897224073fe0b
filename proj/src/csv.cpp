#include "mobembed/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mobembed/errors.hpp"

namespace mobembed {

namespace {

std::string fmt_f3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string fmt_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF newlines everywhere
  if (!out) throw PipelineError("cannot write " + path);
  return out;
}

class LineReader {
 public:
  LineReader(const std::string& path, const std::string& expected_header) : path_(path), in_(path) {
    if (!in_) throw ValidationError("missing input file: " + path);
    std::string header;
    if (!std::getline(in_, header))
      throw ValidationError(path + ": empty file, expected header '" + expected_header + "'");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != expected_header)
      throw ValidationError(path + ":1: bad header '" + header + "', expected '" +
                            expected_header + "'");
    line_no_ = 1;
  }

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError(path_ + ":" + std::to_string(line_no_) + ": " + msg);
  }

  int line_no() const { return line_no_; }

 private:
  std::string path_;
  std::ifstream in_;
  int line_no_ = 0;
};

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

template <typename T>
T parse_num(const LineReader& reader, std::string_view s, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    reader.fail(std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  return value;
}

}  // namespace

void write_trace_csv(const std::string& path, const PositionTrace& trace) {
  auto out = open_out(path);
  out << "node_id,t_start_s,t_end_s,x_m,y_m\n";
  for (std::size_t v = 0; v < trace.segments.size(); ++v) {
    for (const auto& s : trace.segments[v]) {
      out << v << ',' << fmt_f3(s.t_start) << ',' << fmt_f3(s.t_end) << ',' << fmt_f3(s.x) << ','
          << fmt_f3(s.y) << '\n';
    }
  }
}

PositionTrace read_trace_csv(const std::string& path) {
  LineReader reader(path, "node_id,t_start_s,t_end_s,x_m,y_m");
  PositionTrace trace;
  std::string line;
  int last_node = -1;
  while (reader.next(line)) {
    const auto f = split_csv(line);
    if (f.size() != 5) reader.fail("expected 5 fields");
    const int node = parse_num<int>(reader, f[0], "node_id");
    Segment seg;
    seg.t_start = parse_num<double>(reader, f[1], "t_start_s");
    seg.t_end = parse_num<double>(reader, f[2], "t_end_s");
    seg.x = parse_num<double>(reader, f[3], "x_m");
    seg.y = parse_num<double>(reader, f[4], "y_m");
    if (node < 0) reader.fail("negative node id");
    if (node < last_node) reader.fail("rows not sorted by node_id");
    if (node >= static_cast<int>(trace.segments.size()))
      trace.segments.resize(static_cast<std::size_t>(node) + 1);
    auto& segs = trace.segments[static_cast<std::size_t>(node)];
    if (!(seg.t_start < seg.t_end)) reader.fail("segment must have t_start_s < t_end_s");
    if (segs.empty()) {
      if (seg.t_start != 0.0) reader.fail("node coverage must start at 0");
    } else if (seg.t_start != segs.back().t_end) {
      reader.fail("segments must be contiguous");
    }
    segs.push_back(seg);
    last_node = node;
  }
  if (trace.segments.empty()) throw ValidationError(path + ": trace has no segments");
  double duration = -1.0;
  for (std::size_t v = 0; v < trace.segments.size(); ++v) {
    if (trace.segments[v].empty())
      throw ValidationError(path + ": node " + std::to_string(v) + " has no segments");
    const double end = trace.segments[v].back().t_end;
    if (duration < 0.0) duration = end;
    if (end != duration)
      throw ValidationError(path + ": nodes cover different time spans");
  }
  trace.duration_s = duration;
  return trace;
}

void write_meetings_csv(const std::string& path, const std::vector<MeetingEvent>& meetings) {
  auto out = open_out(path);
  out << "group_id,t_start_s,t_end_s,cell_row,cell_col,attendees\n";
  for (const auto& m : meetings) {
    out << m.group << ',' << fmt_f3(m.t_start) << ',' << fmt_f3(m.t_end) << ',' << m.cell_row
        << ',' << m.cell_col << ',';
    for (std::size_t i = 0; i < m.attendees.size(); ++i) {
      if (i) out << ';';
      out << m.attendees[i];
    }
    out << '\n';
  }
}

void write_edges_csv(const std::string& path, const GraphSequence& seq) {
  auto out = open_out(path);
  out << "window,u,v\n";
  for (std::size_t t = 0; t < seq.graphs.size(); ++t) {
    const auto& g = seq.graphs[t];
    for (int u = 0; u < g.n; ++u) {
      for (const int v : g.adj[static_cast<std::size_t>(u)]) {
        if (v > u) out << (t + 1) << ',' << u << ',' << v << '\n';
      }
    }
  }
}

GraphSequence read_edges_csv(const std::string& path, int n_nodes, int n_windows,
                             double window_s, bool truncated_last) {
  LineReader reader(path, "window,u,v");
  GraphSequence seq;
  seq.window_s = window_s;
  seq.truncated_last = truncated_last;
  seq.graphs.assign(static_cast<std::size_t>(n_windows), Graph(n_nodes));
  std::string line;
  long long prev_key = -1;
  while (reader.next(line)) {
    const auto f = split_csv(line);
    if (f.size() != 3) reader.fail("expected 3 fields");
    const int w = parse_num<int>(reader, f[0], "window");
    const int u = parse_num<int>(reader, f[1], "u");
    const int v = parse_num<int>(reader, f[2], "v");
    if (w < 1 || w > n_windows) reader.fail("window index out of range");
    if (u < 0 || u >= n_nodes || v < 0 || v >= n_nodes) reader.fail("node id out of range");
    if (u >= v) reader.fail("edges must satisfy u < v");
    const long long key =
        (static_cast<long long>(w) * n_nodes + u) * n_nodes + v;
    if (key <= prev_key) reader.fail("rows not in (window,u,v) order or duplicated");
    prev_key = key;
    seq.graphs[static_cast<std::size_t>(w) - 1].add_edge(u, v);
  }
  return seq;
}

void write_topology_csv(const std::string& path, const std::vector<GraphTopology>& table) {
  auto out = open_out(path);
  out << "window,node,degree,betweenness,closeness,eigenvector,clustering\n";
  for (std::size_t t = 0; t < table.size(); ++t) {
    const auto& win = table[t];
    for (std::size_t v = 0; v < win.degree.size(); ++v) {
      out << (t + 1) << ',' << v << ',' << win.degree[v] << ',' << fmt_g9(win.betweenness[v])
          << ',' << fmt_g9(win.closeness[v]) << ',' << fmt_g9(win.eigenvector[v]) << ','
          << fmt_g9(win.clustering[v]) << '\n';
    }
  }
}

TopologyCsv read_topology_csv(const std::string& path) {
  LineReader reader(path, "window,node,degree,betweenness,closeness,eigenvector,clustering");
  std::string line;
  std::vector<double> sums;  // n_nodes x 5, grown while reading window 1
  int n_nodes = 0;           // fixed once window 1 is complete
  int window = 0;            // window currently being read
  int next_node = 0;
  while (reader.next(line)) {
    const auto f = split_csv(line);
    if (f.size() != 7) reader.fail("expected 7 fields");
    const int w = parse_num<int>(reader, f[0], "window");
    const int node = parse_num<int>(reader, f[1], "node");
    if (node == 0 && w == window + 1) {
      if (window == 1) n_nodes = next_node;
      if (window > 1 && next_node != n_nodes) reader.fail("previous window is missing node rows");
      window = w;
      next_node = 0;
    }
    if (w != window) reader.fail("window indices must be consecutive from 1, grouped");
    if (node != next_node) reader.fail("node rows must be dense and ascending");
    if (n_nodes > 0 && node >= n_nodes) reader.fail("node id exceeds the window-1 universe");
    ++next_node;
    if (window == 1) sums.resize(static_cast<std::size_t>(next_node) * 5, 0.0);
    auto* s = sums.data() + static_cast<std::size_t>(node) * 5;
    for (int c = 0; c < 5; ++c)
      s[c] += parse_num<double>(reader, f[static_cast<std::size_t>(c) + 2], "metric");
  }
  if (window == 0) throw ValidationError(path + ": no topology rows");
  if (window == 1) n_nodes = next_node;
  if (next_node != n_nodes || n_nodes == 0)
    throw ValidationError(path + ": last window is incomplete");
  TopologyCsv out;
  out.n_nodes = n_nodes;
  out.n_windows = window;
  out.node_averages = Matrix(n_nodes, 5);
  for (int v = 0; v < n_nodes; ++v) {
    for (int c = 0; c < 5; ++c)
      out.node_averages(v, c) = sums[static_cast<std::size_t>(v) * 5 + c] / window;
  }
  return out;
}

void write_walks_txt(const std::string& path, const WalkCorpus& corpus) {
  auto out = open_out(path);
  for (const auto& walk : corpus.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (i) out << ' ';
      out << walk[i];
    }
    out << '\n';
  }
}

WalkCorpus read_walks_txt(const std::string& path, int window_index, int n_nodes) {
  std::ifstream in(path);
  if (!in) throw ValidationError("missing input file: " + path);
  WalkCorpus corpus;
  corpus.window = window_index;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> walk;
    std::istringstream ss(line);
    int id;
    while (ss >> id) {
      if (id < 0 || id >= n_nodes)
        throw ValidationError(path + ":" + std::to_string(line_no) + ": node id out of range");
      walk.push_back(id);
    }
    if (!ss.eof())
      throw ValidationError(path + ":" + std::to_string(line_no) + ": malformed walk line");
    corpus.walks.push_back(std::move(walk));
  }
  corpus.no_edges = corpus.walks.empty();
  return corpus;
}

void write_embedding_csv(const std::string& path, const Matrix& u) {
  auto out = open_out(path);
  out << "node_id";
  for (int c = 0; c < u.cols; ++c) out << ",c" << c;
  out << '\n';
  for (int v = 0; v < u.rows; ++v) {
    out << v;
    for (int c = 0; c < u.cols; ++c) out << ',' << fmt_g9(u(v, c));
    out << '\n';
  }
}

Matrix read_embedding_csv(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw ValidationError("missing input file: " + path);
  std::string header;
  std::getline(probe, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const auto head_fields = split_csv(header);
  if (head_fields.size() < 2 || head_fields[0] != "node_id")
    throw ValidationError(path + ":1: bad embedding header");
  const int d = static_cast<int>(head_fields.size()) - 1;
  for (int c = 0; c < d; ++c) {
    if (head_fields[static_cast<std::size_t>(c) + 1] != "c" + std::to_string(c))
      throw ValidationError(path + ":1: bad embedding header");
  }
  probe.close();

  std::ostringstream expected;
  expected << "node_id";
  for (int c = 0; c < d; ++c) expected << ",c" << c;
  LineReader reader(path, expected.str());
  std::vector<double> data;
  std::string line;
  int expected_node = 0;
  while (reader.next(line)) {
    const auto f = split_csv(line);
    if (static_cast<int>(f.size()) != d + 1) reader.fail("wrong field count");
    const int node = parse_num<int>(reader, f[0], "node_id");
    if (node != expected_node) reader.fail("node rows must be dense and ascending");
    ++expected_node;
    for (int c = 0; c < d; ++c)
      data.push_back(parse_num<double>(reader, f[static_cast<std::size_t>(c) + 1], "component"));
  }
  if (expected_node == 0) throw ValidationError(path + ": no embedding rows");
  Matrix u(expected_node, d);
  u.a = std::move(data);
  return u;
}

void write_loss_csv(const std::string& path, const std::vector<double>& sweep_loss) {
  auto out = open_out(path);
  out << "sweep,loss\n";
  for (std::size_t i = 0; i < sweep_loss.size(); ++i)
    out << i << ',' << fmt_g9(sweep_loss[i]) << '\n';
}

void write_ppmi_csv(const std::string& path, const std::vector<PpmiMatrix>& seq) {
  auto out = open_out(path);
  out << "window,i,j,value\n";
  for (const auto& p : seq) {
    for (int i = 0; i < p.y.rows; ++i) {
      for (int j = 0; j < p.y.cols; ++j) {
        if (p.y(i, j) != 0.0)
          out << p.window << ',' << i << ',' << j << ',' << fmt_g9(p.y(i, j)) << '\n';
      }
    }
  }
}

void write_node_stats_csv(const std::string& path, const AnalyticsReport& rep) {
  auto out = open_out(path);
  out << "node,avg_cosdist,cv_cosdist,avg_norm,cv_norm,high_mobility_flag,high_norm_cv_flag\n";
  for (const auto& s : rep.nodes) {
    out << s.node << ',' << fmt_g9(s.avg_cosdist) << ','
        << (s.cv_cosdist.defined ? fmt_g9(s.cv_cosdist.value) : std::string()) << ','
        << fmt_g9(s.avg_norm) << ','
        << (s.cv_norm.defined ? fmt_g9(s.cv_norm.value) : std::string()) << ','
        << (s.high_mobility ? 1 : 0) << ',' << (s.high_norm_cv ? 1 : 0) << '\n';
  }
}

void write_zscore_csv(const std::string& path, const AnalyticsReport& rep) {
  auto out = open_out(path);
  out << "node";
  for (int t = 0; t < rep.norm_zscore.z.cols; ++t) out << ",w" << (t + 1);
  out << '\n';
  for (int v = 0; v < rep.norm_zscore.z.rows; ++v) {
    out << v;
    for (int t = 0; t < rep.norm_zscore.z.cols; ++t) out << ',' << fmt_g9(rep.norm_zscore.z(v, t));
    out << '\n';
  }
}

void write_node_pearson_csv(const std::string& path, const AnalyticsReport& rep) {
  auto out = open_out(path);
  out << "node";
  for (int j = 0; j < rep.node_pearson.cols; ++j) out << ",n" << j;
  out << '\n';
  for (int i = 0; i < rep.node_pearson.rows; ++i) {
    out << i;
    for (int j = 0; j < rep.node_pearson.cols; ++j) {
      out << ',';
      const double v = rep.node_pearson(i, j);
      if (!std::isnan(v)) out << fmt_g9(v);
    }
    out << '\n';
  }
}

void write_correlations_csv(const std::string& path, const AnalyticsReport& rep) {
  auto out = open_out(path);
  out << "metric_a,metric_b,r,p\n";
  auto emit = [&out](const CorrelationRow& row) {
    out << row.metric_a << ',' << row.metric_b << ',';
    if (row.result.defined)
      out << fmt_g9(row.result.r) << ',' << fmt_g9(row.result.p_value);
    else
      out << ',';
    out << '\n';
  };
  for (const auto& row : rep.embedding_pairs) emit(row);
  for (const auto& row : rep.topology_pairs) emit(row);
}

}  // namespace mobembed
