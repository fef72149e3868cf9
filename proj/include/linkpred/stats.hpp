#pragma once

#include "linkpred/graph.hpp"

namespace linkpred {

// Descriptive statistics of one network, in the usual reporting order.
struct NetworkStats {
  std::int64_t n_nodes = 0;
  std::int64_t n_edges = 0;
  double avg_degree = 0.0;          // 2M/N
  double avg_clustering = 0.0;      // mean of local clustering coefficients
  double avg_shortest_path = 0.0;   // over the largest connected component
  double assortativity = 0.0;       // degree Pearson correlation across edges
  // True when every degree is equal, which leaves the assortativity
  // undefined (0/0). We then report 0 here instead of propagating a NaN.
  bool assortativity_degenerate = false;
  std::int64_t largest_component_size = 0;
};

// Computes all fields in one pass over the graph. The local clustering
// coefficient of a node with degree < 2 counts as 0; the average shortest
// path length is the mean over unordered node pairs inside the largest
// component. Throws ParameterError for graphs with fewer than two nodes.
NetworkStats compute_stats(const Graph& g);

}  // namespace linkpred
