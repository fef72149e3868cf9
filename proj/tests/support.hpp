#pragma once

// Brute-force reference implementations used as oracles. Everything here
// evaluates the defining sums directly with all-pairs loops over the full
// node set, independent of the sparse row-sweep code paths under test, and
// visits contributions in ascending node order so that float-for-float
// agreement (not just tolerance agreement) can be asserted.

#include <cstdint>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/score_matrix.hpp"
#include "linkpred/split.hpp"

namespace linkpred::oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense zeros(NodeId n) {
  return Dense(n, std::vector<double>(n, 0.0));
}

inline Dense cn_brute(const Graph& g) {
  const NodeId n = g.node_count();
  Dense s = zeros(n);
  for (NodeId x = 0; x < n; ++x)
    for (NodeId y = x + 1; y < n; ++y) {
      double v = 0.0;
      for (NodeId z = 0; z < n; ++z)
        if (g.has_edge(x, z) && g.has_edge(y, z)) v += 1.0;
      s[x][y] = s[y][x] = v;
    }
  return s;
}

inline Dense ra_brute(const Graph& g) {
  const NodeId n = g.node_count();
  Dense s = zeros(n);
  for (NodeId x = 0; x < n; ++x)
    for (NodeId y = x + 1; y < n; ++y) {
      double v = 0.0;
      for (NodeId z = 0; z < n; ++z)
        if (g.has_edge(x, z) && g.has_edge(y, z))
          v += 1.0 / static_cast<double>(g.degree(z));
      s[x][y] = s[y][x] = v;
    }
  return s;
}

inline Dense cra_brute(const Graph& g) {
  const NodeId n = g.node_count();
  Dense s = zeros(n);
  for (NodeId x = 0; x < n; ++x)
    for (NodeId y = x + 1; y < n; ++y) {
      std::vector<NodeId> cn;
      for (NodeId z = 0; z < n; ++z)
        if (g.has_edge(x, z) && g.has_edge(y, z)) cn.push_back(z);
      double v = 0.0;
      for (NodeId z : cn) {
        std::int64_t gamma = 0;
        for (NodeId w : cn)
          if (g.has_edge(z, w)) ++gamma;
        v += static_cast<double>(gamma) / static_cast<double>(g.degree(z));
      }
      s[x][y] = s[y][x] = v;
    }
  return s;
}

// Direct pairwise evaluation of the enhancement sums; `self_included`
// switches A to A + I.
inline Dense enhance_brute(const Graph& g, const ScoreMatrix& s,
                           bool self_included) {
  const NodeId n = g.node_count();
  Dense out = zeros(n);
  for (NodeId x = 0; x < n; ++x)
    for (NodeId y = x + 1; y < n; ++y) {
      double t1 = 0.0, t2 = 0.0;
      for (NodeId z = 0; z < n; ++z) {
        const double axz =
            (g.has_edge(x, z) ? 1.0 : 0.0) + (self_included && z == x ? 1.0 : 0.0);
        t1 += axz * s.score(z, y);
      }
      for (NodeId z = 0; z < n; ++z) {
        const double ayz =
            (g.has_edge(y, z) ? 1.0 : 0.0) + (self_included && z == y ? 1.0 : 0.0);
        t2 += ayz * s.score(z, x);
      }
      out[x][y] = out[y][x] = t1 + t2;
    }
  return out;
}

inline Dense cf_brute(const Graph& g, const ScoreMatrix& s) {
  return enhance_brute(g, s, false);
}
inline Dense scf_brute(const Graph& g, const ScoreMatrix& s) {
  return enhance_brute(g, s, true);
}

// Materialized double loop over every (probe, nonobserved) pair.
inline double auc_brute(const ScoreMatrix& scores, const TrainProbeSplit& split) {
  std::unordered_set<std::uint64_t> probe_set;
  for (auto [u, v] : split.probe) probe_set.insert(pack_pair(u, v));
  const NodeId n = split.train.node_count();
  std::int64_t n1 = 0, n2 = 0, n_total = 0;
  for (auto [pu, pv] : split.probe) {
    const double ps = scores.score(pu, pv);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) {
        if (split.train.has_edge(u, v) || probe_set.count(pack_pair(u, v)))
          continue;
        const double us = scores.score(u, v);
        if (ps > us) ++n1;
        else if (ps == us) ++n2;
        ++n_total;
      }
  }
  return (static_cast<double>(n1) + 0.5 * static_cast<double>(n2)) /
         static_cast<double>(n_total);
}

// Random sparse score matrix over ~density of the pair universe. Discrete
// mode draws from a small value set so ties actually occur.
inline ScoreMatrix random_scores(NodeId n, double density, std::uint64_t seed,
                                 bool discrete = false) {
  static constexpr double kLevels[] = {0.5, 1.0, 1.5, 2.0};
  Rng rng(seed);
  std::vector<ScoreMatrix::Entry> entries;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.next_double() >= density) continue;
      const double score =
          discrete ? kLevels[rng.next_below(4)] : rng.next_double() * 2.0;
      entries.push_back({u, v, score});
    }
  return ScoreMatrix::from_entries(n, std::move(entries), "random");
}

// a*s1 + b*s2 over the union of supports.
inline ScoreMatrix linear_combination(double a, const ScoreMatrix& s1, double b,
                                      const ScoreMatrix& s2) {
  std::vector<ScoreMatrix::Entry> entries;
  s1.for_each_pair([&](NodeId u, NodeId v, double x) {
    entries.push_back({u, v, a * x + b * s2.score(u, v)});
  });
  s2.for_each_pair([&](NodeId u, NodeId v, double x) {
    if (s1.score(u, v) == 0.0) entries.push_back({u, v, b * x});
  });
  return ScoreMatrix::from_entries(s1.node_count(), std::move(entries), "lin");
}

inline Graph path_graph(NodeId n) {
  EdgeList e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

inline Graph complete_graph(NodeId n) {
  EdgeList e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

inline Graph cycle_graph(NodeId n) {
  EdgeList e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n),
                                                std::max(i, (i + 1) % n));
  return Graph::from_edges(n, std::move(e));
}

inline Graph star_graph(NodeId leaves) {
  EdgeList e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, std::move(e));
}

}  // namespace linkpred::oracle
