#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace linkpred {

using NodeId = std::int32_t;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline std::uint64_t pack_pair(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

// Counts of lines dropped while parsing an edge list.
struct ParseSummary {
  std::size_t duplicate_edges = 0;  // repeated or reversed duplicates
  std::size_t self_loops = 0;
  std::size_t comment_lines = 0;
};

// Immutable undirected simple graph. Nodes are dense ids 0..N-1; the original
// text labels are kept for output. Adjacency lists are sorted, membership
// queries are O(1) amortized through a hash set of packed pairs.
class Graph {
 public:
  Graph() = default;

  // Build from an explicit edge list over nodes 0..n-1. Self-loops and
  // duplicates are rejected here (they are a caller bug, unlike in parsing).
  // When `labels` is empty, labels default to the decimal node ids.
  static Graph from_edges(NodeId n, EdgeList edges,
                          std::vector<std::string> labels = {});

  NodeId node_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }
  NodeId degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(NodeId u, NodeId v) const {
    return edge_set_.count(pack_pair(u, v)) != 0;
  }
  bool valid_node(NodeId u) const { return u >= 0 && u < n_; }

  // Unique edges, u < v, sorted lexicographically.
  const EdgeList& edges() const { return edges_; }

  const std::string& label(NodeId u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  NodeId n_ = 0;
  std::vector<std::int64_t> offsets_;  // n_+1 entries
  std::vector<NodeId> adj_;            // sorted within each row
  EdgeList edges_;
  std::vector<std::string> labels_;
  std::unordered_set<std::uint64_t> edge_set_;
};

// Parse a whitespace-delimited edge list. Lines starting with '#' or '%' are
// comments; the first two tokens of every other line are node labels, any
// further tokens (weights, timestamps) are ignored. Duplicate edges, reversed
// duplicates and self-loops are dropped and counted in `summary`. Labels map
// to dense ids in first-appearance order.
//
// Throws ParseError on a line with fewer than two tokens (with its line
// number) and on input containing no edges at all.
Graph parse_edge_list(std::istream& in, ParseSummary* summary = nullptr);
Graph parse_edge_list_file(const std::string& path, ParseSummary* summary = nullptr);

// Common neighbors of x and y via sorted-list intersection, O(k_x + k_y).
// Throws ParameterError for node ids outside the graph.
std::vector<NodeId> common_neighbors(const Graph& g, NodeId x, NodeId y);

// Erdos-Renyi G(n, p) with deterministic seeding; used by tests, benchmarks
// and the fixture generator.
Graph random_gnp(NodeId n, double p, std::uint64_t seed);

}  // namespace linkpred
