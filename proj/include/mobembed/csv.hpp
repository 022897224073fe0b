#pragma once

#include <string>
#include <vector>

#include "mobembed/cooccur.hpp"
#include "mobembed/graph.hpp"
#include "mobembed/grm.hpp"
#include "mobembed/matrix.hpp"
#include "mobembed/metrics.hpp"
#include "mobembed/topology.hpp"
#include "mobembed/walks.hpp"

namespace mobembed {

// Readers validate the header and the format invariants and throw
// ValidationError with the offending line number.

// header: node_id,t_start_s,t_end_s,x_m,y_m ; floats with 3 decimals,
// rows sorted by (node_id, t_start_s)
void write_trace_csv(const std::string& path, const PositionTrace& trace);
PositionTrace read_trace_csv(const std::string& path);

// header: group_id,t_start_s,t_end_s,cell_row,cell_col,attendees
void write_meetings_csv(const std::string& path, const std::vector<MeetingEvent>& meetings);

// header: window,u,v ; lexicographic order, u < v
void write_edges_csv(const std::string& path, const GraphSequence& seq);
GraphSequence read_edges_csv(const std::string& path, int n_nodes, int n_windows,
                             double window_s, bool truncated_last);

// header: window,node,degree,betweenness,closeness,eigenvector,clustering
void write_topology_csv(const std::string& path, const std::vector<GraphTopology>& table);
struct TopologyCsv {
  int n_nodes = 0;
  int n_windows = 0;
  Matrix node_averages;  // n x 5
};
TopologyCsv read_topology_csv(const std::string& path);

// one walk per line, space-separated node ids
void write_walks_txt(const std::string& path, const WalkCorpus& corpus);
WalkCorpus read_walks_txt(const std::string& path, int window_index, int n_nodes);

// header: node_id,c0,...,c{d-1} ; 9 significant digits
void write_embedding_csv(const std::string& path, const Matrix& u);
Matrix read_embedding_csv(const std::string& path);

// header: sweep,loss
void write_loss_csv(const std::string& path, const std::vector<double>& sweep_loss);

// header: window,i,j,value ; nonzero entries only
void write_ppmi_csv(const std::string& path, const std::vector<PpmiMatrix>& seq);

void write_node_stats_csv(const std::string& path, const AnalyticsReport& rep);
void write_zscore_csv(const std::string& path, const AnalyticsReport& rep);
void write_node_pearson_csv(const std::string& path, const AnalyticsReport& rep);
void write_correlations_csv(const std::string& path, const AnalyticsReport& rep);

}  // namespace mobembed
