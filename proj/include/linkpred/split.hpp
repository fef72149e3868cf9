#pragma once

#include <cstdint>

#include "linkpred/graph.hpp"

namespace linkpred {

// A random division of one observed network into a training graph and a
// held-out probe edge set. The training graph keeps the full node set, so
// the universal pair count |U| = N(N-1)/2 is split-invariant; nodes isolated
// by the split simply lose their edges.
struct TrainProbeSplit {
  Graph train;
  EdgeList probe;  // unordered pairs, u < v, sorted
  double probe_fraction = 0.0;
  std::uint64_t seed = 0;

  // Pairs in the full observed edge set E = E_train | E_probe.
  std::int64_t observed_edge_count() const {
    return train.edge_count() + static_cast<std::int64_t>(probe.size());
  }
  // |U| over the unchanged node set.
  std::int64_t universal_pair_count() const {
    auto n = static_cast<std::int64_t>(train.node_count());
    return n * (n - 1) / 2;
  }
  // |U \ E|: the nonobserved pairs, i.e. the negative class for evaluation.
  std::int64_t nonobserved_pair_count() const {
    return universal_pair_count() - observed_edge_count();
  }
};

// Sample round(probe_fraction * M) probe edges uniformly without replacement
// (round half up). Deterministic for a fixed seed. Throws ParameterError if
// probe_fraction is outside (0,1) or the rounded probe size is zero.
TrainProbeSplit split_train_probe(const Graph& g, double probe_fraction,
                                  std::uint64_t seed);

}  // namespace linkpred
