#ifndef LNGRAPH_METRICS_HPP
#define LNGRAPH_METRICS_HPP

#include "lngraph/ln_graph.hpp"

namespace lngraph {

struct GraphMetrics {
  int order = 0;
  long long size = 0;
  int min_degree = 0;
  int max_degree = 0;
  int girth = 0;     // 0 if acyclic
  int diameter = 0;  // meaningful only when connected
  bool connected = false;
};

/// Exact metrics: girth by BFS shortest-cycle search over every root,
/// diameter and connectivity by all-pairs BFS.
GraphMetrics metrics(const LnGraph& g);

}  // namespace lngraph

#endif
