#include "linkpred/score_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "linkpred/errors.hpp"

namespace linkpred {

ScoreMatrix ScoreMatrix::from_entries(NodeId node_count,
                                      std::vector<Entry> entries,
                                      std::string tag) {
  if (node_count < 0) throw ParameterError("negative node count");
  ScoreMatrix s;
  s.n_ = node_count;
  s.tag_ = std::move(tag);

  std::vector<Entry> kept;
  kept.reserve(entries.size());
  for (auto& e : entries) {
    if (e.u == e.v) throw ParameterError("diagonal score entry");
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count)
      throw ParameterError("score entry out of range");
    if (!std::isfinite(e.score)) throw NumericalError("non-finite score entry");
    if (e.score == 0.0) continue;
    if (e.u > e.v) std::swap(e.u, e.v);
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end(), [](const Entry& a, const Entry& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < kept.size(); ++i)
    if (kept[i].u == kept[i - 1].u && kept[i].v == kept[i - 1].v)
      throw ParameterError("duplicate score entry");

  std::vector<std::int64_t> deg(node_count, 0);
  for (const auto& e : kept) {
    ++deg[e.u];
    ++deg[e.v];
  }
  s.offsets_.assign(node_count + 1, 0);
  for (NodeId i = 0; i < node_count; ++i) s.offsets_[i + 1] = s.offsets_[i] + deg[i];
  s.col_.resize(kept.size() * 2);
  s.val_.resize(kept.size() * 2);
  std::vector<std::int64_t> cursor(s.offsets_.begin(), s.offsets_.end() - 1);
  for (const auto& e : kept) {
    s.col_[cursor[e.u]] = e.v;
    s.val_[cursor[e.u]++] = e.score;
    s.col_[cursor[e.v]] = e.u;
    s.val_[cursor[e.v]++] = e.score;
  }
  // Entries were scattered in (u,v)-sorted order, so rows with mixed smaller
  // and larger partners still need a per-row sort by column.
  for (NodeId i = 0; i < node_count; ++i) {
    auto b = s.offsets_[i], e = s.offsets_[i + 1];
    std::vector<std::pair<NodeId, double>> tmp;
    tmp.reserve(e - b);
    for (auto j = b; j < e; ++j) tmp.emplace_back(s.col_[j], s.val_[j]);
    std::sort(tmp.begin(), tmp.end());
    for (auto j = b; j < e; ++j) {
      s.col_[j] = tmp[j - b].first;
      s.val_[j] = tmp[j - b].second;
    }
  }
  return s;
}

double ScoreMatrix::score(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw ParameterError("score lookup out of range");
  if (u == v) return 0.0;
  auto r = row(u);
  auto it = std::lower_bound(r.cols.begin(), r.cols.end(), v);
  if (it == r.cols.end() || *it != v) return 0.0;
  return r.vals[it - r.cols.begin()];
}

}  // namespace linkpred
