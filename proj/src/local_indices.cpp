#include "linkpred/local_indices.hpp"

#include <algorithm>

namespace linkpred {

namespace {

// Gustavson-style row sweep: for every source x, scatter a weight w(z) over
// the 2-hop targets y reached through each neighbor z. Rows are processed in
// ascending x and neighbors in ascending z, so each pair accumulates its
// terms in ascending common-neighbor order (the same order a direct
// evaluation of the defining sum uses).
template <class WeightOf>
ScoreMatrix two_hop_accumulate(const Graph& g, WeightOf weight_of,
                               std::string tag) {
  const NodeId n = g.node_count();
  std::vector<double> acc(n, 0.0);
  std::vector<NodeId> touched;
  std::vector<ScoreMatrix::Entry> entries;
  for (NodeId x = 0; x < n; ++x) {
    touched.clear();
    for (NodeId z : g.neighbors(x)) {
      const double w = weight_of(z);
      for (NodeId y : g.neighbors(z)) {
        if (y <= x) continue;  // each unordered pair from its smaller end
        if (acc[y] == 0.0) touched.push_back(y);
        acc[y] += w;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (NodeId y : touched) {
      entries.push_back({x, y, acc[y]});
      acc[y] = 0.0;
    }
  }
  return ScoreMatrix::from_entries(n, std::move(entries), std::move(tag));
}

}  // namespace

ScoreMatrix score_cn(const Graph& g) {
  return two_hop_accumulate(g, [](NodeId) { return 1.0; }, "cn");
}

ScoreMatrix score_ra(const Graph& g) {
  return two_hop_accumulate(
      g, [&](NodeId z) { return 1.0 / static_cast<double>(g.degree(z)); }, "ra");
}

ScoreMatrix score_cra(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<NodeId> candidates, cn_set, gamma;
  std::vector<ScoreMatrix::Entry> entries;
  for (NodeId x = 0; x < n; ++x) {
    // Candidates y > x with at least one common neighbor.
    candidates.clear();
    for (NodeId z : g.neighbors(x))
      for (NodeId y : g.neighbors(z)) {
        if (y <= x || seen[y]) continue;
        seen[y] = 1;
        candidates.push_back(y);
      }
    std::sort(candidates.begin(), candidates.end());
    auto gx = g.neighbors(x);
    for (NodeId y : candidates) {
      seen[y] = 0;
      auto gy = g.neighbors(y);
      cn_set.clear();
      std::set_intersection(gx.begin(), gx.end(), gy.begin(), gy.end(),
                            std::back_inserter(cn_set));
      double score = 0.0;
      for (NodeId z : cn_set) {
        auto gz = g.neighbors(z);
        gamma.clear();
        std::set_intersection(gz.begin(), gz.end(), cn_set.begin(), cn_set.end(),
                              std::back_inserter(gamma));
        score += static_cast<double>(gamma.size()) /
                 static_cast<double>(g.degree(z));
      }
      if (score != 0.0) entries.push_back({x, y, score});
    }
  }
  return ScoreMatrix::from_entries(n, std::move(entries), "cra");
}

}  // namespace linkpred
