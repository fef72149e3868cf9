#include "linkpred/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "linkpred/errors.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

Graph Graph::from_edges(NodeId n, EdgeList edges, std::vector<std::string> labels) {
  if (n < 0) throw ParameterError("node count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.edge_set_.reserve(edges.size() * 2);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loop in edge list");
    if (u > v) std::swap(u, v);
    if (!g.edge_set_.insert(pack_pair(u, v)).second)
      throw ParameterError("duplicate edge in edge list");
  }
  std::sort(edges.begin(), edges.end());
  g.edges_ = std::move(edges);

  std::vector<NodeId> deg(n, 0);
  for (auto [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (NodeId i = 0; i < n; ++i)
    std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);

  if (labels.empty()) {
    g.labels_.reserve(n);
    for (NodeId i = 0; i < n; ++i) g.labels_.push_back(std::to_string(i));
  } else {
    if (static_cast<NodeId>(labels.size()) != n)
      throw ParameterError("label count does not match node count");
    g.labels_ = std::move(labels);
  }
  return g;
}

Graph parse_edge_list(std::istream& in, ParseSummary* summary) {
  ParseSummary local;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  EdgeList edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](const std::string& label) -> NodeId {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;  // blank line
    if (a[0] == '#' || a[0] == '%') {
      ++local.comment_lines;
      continue;
    }
    if (!(ls >> b))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected at least 2 tokens, got 1");
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    if (!seen.insert(pack_pair(u, v)).second) {
      ++local.duplicate_edges;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (edges.empty()) throw ParseError("no edges");
  if (summary) *summary = local;
  const auto n = static_cast<NodeId>(labels.size());
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph parse_edge_list_file(const std::string& path, ParseSummary* summary) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open file: " + path);
  return parse_edge_list(in, summary);
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId x, NodeId y) {
  if (!g.valid_node(x) || !g.valid_node(y))
    throw ParameterError("node id out of range");
  auto gx = g.neighbors(x);
  auto gy = g.neighbors(y);
  std::vector<NodeId> out;
  std::set_intersection(gx.begin(), gx.end(), gy.begin(), gy.end(),
                        std::back_inserter(out));
  return out;
}

Graph random_gnp(NodeId n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw ParameterError("bad G(n,p) parameters");
  Rng rng(seed);
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace linkpred
