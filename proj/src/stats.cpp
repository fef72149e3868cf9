#include "linkpred/stats.hpp"

#include <algorithm>
#include <queue>

#include "linkpred/errors.hpp"

namespace linkpred {

namespace {

// Sum of BFS distances from src to every other node of its component, plus
// the number of nodes reached.
std::pair<std::int64_t, std::int64_t> bfs_distance_sum(const Graph& g, NodeId src,
                                                       std::vector<NodeId>& dist) {
  std::fill(dist.begin(), dist.end(), NodeId{-1});
  dist[src] = 0;
  std::queue<NodeId> q;
  q.push(src);
  std::int64_t sum = 0, reached = 0;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      sum += dist[v];
      ++reached;
      q.push(v);
    }
  }
  return {sum, reached};
}

}  // namespace

NetworkStats compute_stats(const Graph& g) {
  const NodeId n = g.node_count();
  if (n < 2) throw ParameterError("compute_stats needs at least 2 nodes");
  NetworkStats s;
  s.n_nodes = n;
  s.n_edges = g.edge_count();
  s.avg_degree = 2.0 * static_cast<double>(s.n_edges) / static_cast<double>(n);

  // Local clustering: count, per node, the links among its neighbors.
  // Each edge (u,v) raises the triangle-corner count of u and v by
  // |N(u) & N(v)|; every triangle corner is hit twice that way.
  std::vector<std::int64_t> corners(n, 0);
  for (auto [u, v] : g.edges()) {
    auto gu = g.neighbors(u);
    auto gv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    std::int64_t c = 0;
    while (i < gu.size() && j < gv.size()) {
      if (gu[i] < gv[j]) ++i;
      else if (gu[i] > gv[j]) ++j;
      else ++c, ++i, ++j;
    }
    corners[u] += c;
    corners[v] += c;
  }
  double cl_sum = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    auto k = static_cast<double>(g.degree(u));
    if (k >= 2.0)
      cl_sum += static_cast<double>(corners[u]) / (k * (k - 1.0));
  }
  s.avg_clustering = cl_sum / static_cast<double>(n);

  // Largest connected component.
  std::vector<NodeId> comp(n, -1);
  NodeId comp_count = 0;
  std::vector<std::int64_t> comp_size;
  for (NodeId u = 0; u < n; ++u) {
    if (comp[u] >= 0) continue;
    std::queue<NodeId> q;
    q.push(u);
    comp[u] = comp_count;
    std::int64_t size = 1;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      for (NodeId y : g.neighbors(x)) {
        if (comp[y] >= 0) continue;
        comp[y] = comp_count;
        ++size;
        q.push(y);
      }
    }
    comp_size.push_back(size);
    ++comp_count;
  }
  const NodeId largest =
      static_cast<NodeId>(std::max_element(comp_size.begin(), comp_size.end()) -
                          comp_size.begin());
  s.largest_component_size = comp_size[largest];

  if (s.largest_component_size >= 2) {
    std::vector<NodeId> dist(n);
    std::int64_t total = 0, pairs = 0;
    for (NodeId u = 0; u < n; ++u) {
      if (comp[u] != largest) continue;
      auto [sum, reached] = bfs_distance_sum(g, u, dist);
      total += sum;
      pairs += reached;
    }
    // Every unordered pair was counted from both endpoints.
    s.avg_shortest_path = static_cast<double>(total) / static_cast<double>(pairs);
  }

  // Newman's degree assortativity from exact integer edge sums:
  //   r = (4*M*sum(jk) - sum(j+k)^2) / (2*M*sum(j^2+k^2) - sum(j+k)^2)
  // with j,k the endpoint degrees of each edge, counted once.
  std::int64_t sum_jk = 0, sum_j_plus_k = 0, sum_j2_plus_k2 = 0;
  for (auto [u, v] : g.edges()) {
    std::int64_t j = g.degree(u), k = g.degree(v);
    sum_jk += j * k;
    sum_j_plus_k += j + k;
    sum_j2_plus_k2 += j * j + k * k;
  }
  const auto m = static_cast<__int128>(s.n_edges);
  const auto b2 = static_cast<__int128>(sum_j_plus_k) * sum_j_plus_k;
  const __int128 num = 4 * m * sum_jk - b2;
  const __int128 den = 2 * m * sum_j2_plus_k2 - b2;
  if (den == 0) {
    s.assortativity = 0.0;
    s.assortativity_degenerate = true;
  } else {
    s.assortativity = static_cast<double>(num) / static_cast<double>(den);
  }
  return s;
}

}  // namespace linkpred
