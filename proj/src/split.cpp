#include "linkpred/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linkpred/errors.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

TrainProbeSplit split_train_probe(const Graph& g, double probe_fraction,
                                  std::uint64_t seed) {
  if (!(probe_fraction > 0.0 && probe_fraction < 1.0))
    throw ParameterError("probe_fraction must lie in (0,1)");
  const auto m = g.edge_count();
  const auto probe_size = static_cast<std::int64_t>(
      std::floor(probe_fraction * static_cast<double>(m) + 0.5));
  if (probe_size < 1)
    throw ParameterError("probe set would be empty at this fraction");

  std::vector<std::int64_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  // Partial Fisher-Yates: the first probe_size slots become the sample.
  for (std::int64_t i = 0; i < probe_size; ++i) {
    auto j = i + static_cast<std::int64_t>(rng.next_below(m - i));
    std::swap(order[i], order[j]);
  }

  const auto& all = g.edges();
  std::vector<char> is_probe(m, 0);
  for (std::int64_t i = 0; i < probe_size; ++i) is_probe[order[i]] = 1;

  TrainProbeSplit split;
  split.probe_fraction = probe_fraction;
  split.seed = seed;
  EdgeList train_edges;
  train_edges.reserve(m - probe_size);
  split.probe.reserve(probe_size);
  for (std::int64_t i = 0; i < m; ++i)
    (is_probe[i] ? split.probe : train_edges).push_back(all[i]);
  std::sort(split.probe.begin(), split.probe.end());
  split.train = Graph::from_edges(g.node_count(), std::move(train_edges),
                                  g.labels());
  return split;
}

}  // namespace linkpred
