#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

// Sparse symmetric map from unordered node pairs to real scores. Absent pairs
// score 0; the diagonal is excluded by construction. Storage is a symmetric
// CSR (both orientations), which gives the enhancement transforms cheap row
// access and keeps iteration over unique pairs trivial.
class ScoreMatrix {
 public:
  struct Entry {
    NodeId u, v;
    double score;
  };

  struct Row {
    std::span<const NodeId> cols;
    std::span<const double> vals;
    std::size_t size() const { return cols.size(); }
  };

  ScoreMatrix() = default;

  // Build from unique unordered-pair entries. Orientation is normalized,
  // exact zeros are dropped (they tie with the implicit zero anyway).
  // Throws ParameterError on diagonal/out-of-range/duplicate entries and
  // NumericalError on non-finite scores.
  static ScoreMatrix from_entries(NodeId node_count, std::vector<Entry> entries,
                                  std::string tag);

  NodeId node_count() const { return n_; }
  std::size_t entry_count() const { return col_.size() / 2; }
  const std::string& tag() const { return tag_; }

  // Score of an unordered pair; 0 when no entry is stored.
  double score(NodeId u, NodeId v) const;

  // All stored partners of u, columns ascending.
  Row row(NodeId u) const {
    return {{col_.data() + offsets_[u], col_.data() + offsets_[u + 1]},
            {val_.data() + offsets_[u], val_.data() + offsets_[u + 1]}};
  }

  // Visit every stored unique pair as f(u, v, score) with u < v, ordered.
  template <class F>
  void for_each_pair(F&& f) const {
    for (NodeId u = 0; u < n_; ++u) {
      auto r = row(u);
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r.cols[i] > u) f(u, r.cols[i], r.vals[i]);
    }
  }

 private:
  NodeId n_ = 0;
  std::vector<std::int64_t> offsets_;
  std::vector<NodeId> col_;
  std::vector<double> val_;
  std::string tag_;
};

}  // namespace linkpred
