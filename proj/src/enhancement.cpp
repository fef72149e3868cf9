#include "linkpred/enhancement.hpp"

#include <algorithm>

#include "linkpred/errors.hpp"

namespace linkpred {

namespace {

// Shared row sweep for both transforms. For every x the two product terms
// accumulate into separate scratch rows, mirroring the two sums of the
// pairwise definition, and are combined once at emission; with sources
// visited in ascending order either route performs the identical float
// additions, so the matrix form and a brute-force pairwise evaluation agree
// exactly, not just within tolerance.
ScoreMatrix enhance_impl(const Graph& g, const ScoreMatrix& s,
                         bool self_included, std::string tag) {
  if (s.node_count() != g.node_count())
    throw ParameterError("score matrix does not match graph node set");
  const NodeId n = g.node_count();
  std::vector<double> acc1(n, 0.0), acc2(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<NodeId> touched;
  std::vector<ScoreMatrix::Entry> entries;

  auto touch = [&](NodeId y) {
    if (!seen[y]) {
      seen[y] = 1;
      touched.push_back(y);
    }
  };

  for (NodeId x = 0; x < n; ++x) {
    touched.clear();
    // Term 1: row x of A S (plus the z = x self term for SCF), i.e. for
    // every z adjacent to x (or equal to it), scatter S's row z.
    auto scatter_term1 = [&](NodeId z) {
      auto r = s.row(z);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const NodeId y = r.cols[i];
        if (y == x) continue;
        touch(y);
        acc1[y] += r.vals[i];
      }
    };
    auto gx = g.neighbors(x);
    if (self_included) {
      std::size_t i = 0;
      for (; i < gx.size() && gx[i] < x; ++i) scatter_term1(gx[i]);
      scatter_term1(x);
      for (; i < gx.size(); ++i) scatter_term1(gx[i]);
    } else {
      for (NodeId z : gx) scatter_term1(z);
    }
    // Term 2: row x of S A (plus S itself for SCF): each stored partner z of
    // x forwards its score to z's neighborhood (and to z under SCF).
    auto rx = s.row(x);
    for (std::size_t i = 0; i < rx.size(); ++i) {
      const NodeId z = rx.cols[i];
      const double sv = rx.vals[i];
      auto gz = g.neighbors(z);
      if (self_included) {
        std::size_t j = 0;
        for (; j < gz.size() && gz[j] < z; ++j) {
          if (gz[j] != x) {
            touch(gz[j]);
            acc2[gz[j]] += sv;
          }
        }
        if (z != x) {
          touch(z);
          acc2[z] += sv;
        }
        for (; j < gz.size(); ++j) {
          if (gz[j] != x) {
            touch(gz[j]);
            acc2[gz[j]] += sv;
          }
        }
      } else {
        for (NodeId y : gz) {
          if (y == x) continue;
          touch(y);
          acc2[y] += sv;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (NodeId y : touched) {
      if (y > x) {
        const double total = acc1[y] + acc2[y];
        if (total != 0.0) entries.push_back({x, y, total});
      }
      acc1[y] = 0.0;
      acc2[y] = 0.0;
      seen[y] = 0;
    }
  }
  return ScoreMatrix::from_entries(n, std::move(entries), std::move(tag));
}

}  // namespace

ScoreMatrix cf_enhance(const Graph& g, const ScoreMatrix& s) {
  return enhance_impl(g, s, false, s.tag() + "+cf");
}

ScoreMatrix scf_enhance(const Graph& g, const ScoreMatrix& s) {
  return enhance_impl(g, s, true, s.tag() + "+scf");
}

}  // namespace linkpred
