#include "linkpred/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "linkpred/enhancement.hpp"
#include "linkpred/errors.hpp"
#include "linkpred/local_indices.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

namespace {

constexpr std::uint64_t kSpmStream = 0x53504DULL;      // "SPM"
constexpr std::uint64_t kSampledAucStream = 0x415543ULL;  // "AUC"

const char* base_name(BaseIndex b) {
  switch (b) {
    case BaseIndex::CN: return "cn";
    case BaseIndex::RA: return "ra";
    case BaseIndex::CRA: return "cra";
    case BaseIndex::Katz: return "katz";
    case BaseIndex::LO: return "lo";
    case BaseIndex::SPM: return "spm";
  }
  return "?";
}

std::unordered_set<std::uint64_t> packed_set(const EdgeList& pairs) {
  std::unordered_set<std::uint64_t> s;
  s.reserve(pairs.size() * 2);
  for (auto [u, v] : pairs) s.insert(pack_pair(u, v));
  return s;
}

// Rethrow the in-flight exception with a context prefix, preserving its
// type for the CLI exit-code mapping. Unknown types propagate unchanged.
[[noreturn]] void rethrow_with_context(const std::string& prefix) {
  try {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(prefix + e.what());
  } catch (const ParameterError& e) {
    throw ParameterError(prefix + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(prefix + e.what());
  } catch (const ResourceError& e) {
    throw ResourceError(prefix + e.what());
  }
}

}  // namespace

std::string IndexSpec::name() const {
  std::string s = base_name(base);
  if (enh == Enhancement::CF) s += "+cf";
  else if (enh == Enhancement::SCF) s += "+scf";
  return s;
}

std::string IndexSpec::category() const { return base_name(base); }

IndexSpec parse_index_spec(const std::string& text) {
  std::string lowered;
  for (char c : text)
    lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto plus = lowered.find('+');
  const std::string base_tok = lowered.substr(0, plus);
  const std::string enh_tok =
      plus == std::string::npos ? "" : lowered.substr(plus + 1);

  IndexSpec spec;
  if (base_tok == "cn") spec.base = BaseIndex::CN;
  else if (base_tok == "ra") spec.base = BaseIndex::RA;
  else if (base_tok == "cra") spec.base = BaseIndex::CRA;
  else if (base_tok == "katz") spec.base = BaseIndex::Katz;
  else if (base_tok == "lo") spec.base = BaseIndex::LO;
  else if (base_tok == "spm") spec.base = BaseIndex::SPM;
  else
    throw ParameterError(
        "unknown index '" + text +
        "'; valid specs: {cn,ra,cra,katz,lo,spm} with optional +cf or +scf "
        "(e.g. cn, ra+scf, cra+cf)");
  if (enh_tok.empty()) spec.enh = Enhancement::None;
  else if (enh_tok == "cf") spec.enh = Enhancement::CF;
  else if (enh_tok == "scf") spec.enh = Enhancement::SCF;
  else
    throw ParameterError("unknown enhancement '+" + enh_tok + "' in '" + text +
                         "'; use +cf or +scf");
  return spec;
}

std::vector<IndexSpec> parse_index_list(const std::string& comma_separated) {
  std::vector<IndexSpec> specs;
  std::string token;
  for (std::size_t i = 0; i <= comma_separated.size(); ++i) {
    if (i == comma_separated.size() || comma_separated[i] == ',') {
      if (!token.empty()) specs.push_back(parse_index_spec(token));
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(comma_separated[i]))) {
      token += comma_separated[i];
    }
  }
  if (specs.empty()) throw ParameterError("empty index list");
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = i + 1; j < specs.size(); ++j)
      if (specs[i] == specs[j])
        throw ParameterError("duplicate index '" + specs[i].name() + "'");
  return specs;
}

std::vector<IndexSpec> standard_index_set() {
  std::vector<IndexSpec> specs;
  for (auto base : {BaseIndex::CN, BaseIndex::RA, BaseIndex::CRA})
    for (auto enh : {Enhancement::None, Enhancement::CF, Enhancement::SCF})
      specs.push_back({base, enh});
  return specs;
}

double auc_exact(const ScoreMatrix& scores, const TrainProbeSplit& split) {
  if (split.probe.empty()) throw ParameterError("empty probe set");
  const auto probe_lookup = packed_set(split.probe);
  const std::int64_t neg_total = split.nonobserved_pair_count();
  if (neg_total <= 0) throw ParameterError("no nonobserved pairs to compare");

  // Stored scores of the negative class; everything not stored is 0.
  std::vector<double> neg;
  scores.for_each_pair([&](NodeId u, NodeId v, double s) {
    if (split.train.has_edge(u, v)) return;
    if (probe_lookup.count(pack_pair(u, v))) return;
    neg.push_back(s);
  });
  std::sort(neg.begin(), neg.end());
  const std::int64_t neg_zero = neg_total - static_cast<std::int64_t>(neg.size());

  std::int64_t n1 = 0, n2 = 0;
  for (auto [u, v] : split.probe) {
    const double p = scores.score(u, v);
    const auto lo = std::lower_bound(neg.begin(), neg.end(), p);
    const auto hi = std::upper_bound(lo, neg.end(), p);
    n1 += lo - neg.begin();
    n2 += hi - lo;
    if (p > 0.0) n1 += neg_zero;
    else if (p == 0.0) n2 += neg_zero;
  }
  const std::int64_t n =
      static_cast<std::int64_t>(split.probe.size()) * neg_total;
  return (static_cast<double>(n1) + 0.5 * static_cast<double>(n2)) /
         static_cast<double>(n);
}

double auc_sampled(const ScoreMatrix& scores, const TrainProbeSplit& split,
                   std::int64_t n, std::uint64_t seed) {
  if (split.probe.empty()) throw ParameterError("empty probe set");
  if (n < 1) throw ParameterError("auc_sampled needs n >= 1");
  if (split.nonobserved_pair_count() <= 0)
    throw ParameterError("no nonobserved pairs to compare");
  const auto probe_lookup = packed_set(split.probe);
  const auto n_nodes = static_cast<std::uint64_t>(split.train.node_count());
  Rng rng(seed);
  std::int64_t n1 = 0, n2 = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& e = split.probe[rng.next_below(split.probe.size())];
    NodeId u, v;
    do {
      u = static_cast<NodeId>(rng.next_below(n_nodes));
      v = static_cast<NodeId>(rng.next_below(n_nodes));
    } while (u == v || split.train.has_edge(u, v) ||
             probe_lookup.count(pack_pair(u, v)) != 0);
    const double ps = scores.score(e.first, e.second);
    const double us = scores.score(u, v);
    if (ps > us) ++n1;
    else if (ps == us) ++n2;
  }
  return (static_cast<double>(n1) + 0.5 * static_cast<double>(n2)) /
         static_cast<double>(n);
}

ScoreMatrix compute_index(const Graph& train, const IndexSpec& spec,
                          const BaselineParams& params, std::uint64_t run_seed) {
  ScoreMatrix base;
  switch (spec.base) {
    case BaseIndex::CN: base = score_cn(train); break;
    case BaseIndex::RA: base = score_ra(train); break;
    case BaseIndex::CRA: base = score_cra(train); break;
    case BaseIndex::Katz: {
      const double beta = params.katz_beta
                              ? *params.katz_beta
                              : default_katz_beta(spectral_radius(train));
      base = katz_scores(train, beta, params.dense_cap);
      break;
    }
    case BaseIndex::LO:
      base = lo_scores(train, params.lo_alpha, params.dense_cap);
      break;
    case BaseIndex::SPM:
      base = spm_scores(train, params.spm_fraction, params.spm_selections,
                        derive_seed(run_seed, kSpmStream), params.dense_cap);
      break;
  }
  switch (spec.enh) {
    case Enhancement::None: return base;
    case Enhancement::CF: return cf_enhance(train, base);
    case Enhancement::SCF: return scf_enhance(train, base);
  }
  return base;
}

namespace {

struct RunOutput {
  std::vector<double> auc;      // per spec
  std::vector<double> seconds;  // per spec
};

RunOutput execute_run(const ExperimentConfig& cfg, const Graph& g, int run) {
  const std::uint64_t run_seed =
      derive_seed(cfg.master_seed, static_cast<std::uint64_t>(run));
  const TrainProbeSplit split =
      split_train_probe(g, cfg.probe_fraction, run_seed);

  RunOutput out;
  out.auc.resize(cfg.indices.size());
  out.seconds.resize(cfg.indices.size());
  // Base matrices shared between a base index and its enhanced variants are
  // computed once; the cost lands on whichever spec triggered it first.
  std::map<BaseIndex, ScoreMatrix> base_cache;
  for (std::size_t i = 0; i < cfg.indices.size(); ++i) {
    const IndexSpec& spec = cfg.indices[i];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto it = base_cache.find(spec.base);
      if (it == base_cache.end()) {
        IndexSpec base_only{spec.base, Enhancement::None};
        it = base_cache
                 .emplace(spec.base, compute_index(split.train, base_only,
                                                   cfg.baselines, run_seed))
                 .first;
      }
      ScoreMatrix enhanced;
      const ScoreMatrix* active = &it->second;
      if (spec.enh == Enhancement::CF) {
        enhanced = cf_enhance(split.train, it->second);
        active = &enhanced;
      } else if (spec.enh == Enhancement::SCF) {
        enhanced = scf_enhance(split.train, it->second);
        active = &enhanced;
      }
      out.auc[i] =
          cfg.auc_mode == AucMode::Exact
              ? auc_exact(*active, split)
              : auc_sampled(*active, split, cfg.auc_samples,
                            derive_seed(run_seed, kSampledAucStream + i));
    } catch (...) {
      rethrow_with_context("index '" + spec.name() + "': ");
    }
    out.seconds[i] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }
  return out;
}

}  // namespace

std::vector<IndexResult> run_experiment(const ExperimentConfig& cfg,
                                        const Graph& g) {
  if (cfg.runs < 1) throw ParameterError("runs must be >= 1");
  if (cfg.indices.empty()) throw ParameterError("no indices configured");
  if (!(cfg.probe_fraction > 0.0 && cfg.probe_fraction < 1.0))
    throw ParameterError("probe_fraction must lie in (0,1)");
  if (cfg.auc_mode == AucMode::Sampled && cfg.auc_samples < 1)
    throw ParameterError("sampled AUC needs at least one comparison");
  for (const auto& spec : cfg.indices)
    if (spec.is_dense() && g.node_count() > cfg.baselines.dense_cap)
      throw ResourceError("index '" + spec.name() + "' needs a dense kernel; " +
                          std::to_string(g.node_count()) +
                          " nodes exceed the dense cap of " +
                          std::to_string(cfg.baselines.dense_cap));

  std::vector<RunOutput> outputs(cfg.runs);
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.runs);

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int run = next.fetch_add(1);
      if (run >= cfg.runs || failed.load()) return;
      try {
        outputs[run] = execute_run(cfg, g, run);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            try {
              rethrow_with_context("run " + std::to_string(run) + ", ");
            } catch (...) {
              error = std::current_exception();
            }
          }
        }
        failed.store(true);
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<IndexResult> results(cfg.indices.size());
  for (std::size_t i = 0; i < cfg.indices.size(); ++i) {
    IndexResult& r = results[i];
    r.dataset = cfg.dataset;
    r.index = cfg.indices[i].name();
    r.runs = cfg.runs;
    r.probe_fraction = cfg.probe_fraction;
    double sum = 0.0;
    for (int run = 0; run < cfg.runs; ++run) {
      sum += outputs[run].auc[i];
      r.seconds += outputs[run].seconds[i];
    }
    r.auc_mean = sum / cfg.runs;
    if (cfg.runs > 1) {
      double ss = 0.0;
      for (int run = 0; run < cfg.runs; ++run) {
        const double d = outputs[run].auc[i] - r.auc_mean;
        ss += d * d;
      }
      r.auc_std = std::sqrt(ss / (cfg.runs - 1));
    }
  }
  return results;
}

std::map<std::string, std::string> default_categories(
    const std::vector<IndexSpec>& specs) {
  std::map<std::string, std::string> out;
  for (const auto& s : specs) out[s.name()] = s.category();
  return out;
}

WinningRates winning_rates(const std::vector<IndexResult>& table,
                           const std::map<std::string, std::string>& category_of) {
  std::vector<std::string> datasets, indices;
  std::map<std::pair<std::string, std::string>, double> cell;
  for (const auto& r : table) {
    if (!cell.emplace(std::make_pair(r.dataset, r.index), r.auc_mean).second)
      throw ParameterError("duplicate table cell for (" + r.dataset + ", " +
                           r.index + ")");
    if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end())
      datasets.push_back(r.dataset);
    if (std::find(indices.begin(), indices.end(), r.index) == indices.end())
      indices.push_back(r.index);
  }
  if (datasets.empty()) throw ParameterError("empty AUC table");
  for (const auto& d : datasets)
    for (const auto& i : indices)
      if (!cell.count({d, i}))
        throw ParameterError("missing AUC cell for (" + d + ", " + i + ")");
  for (const auto& i : indices)
    if (!category_of.count(i))
      throw ParameterError("no category assigned to index '" + i + "'");

  auto award = [&](const std::vector<std::string>& group,
                   const std::string& dataset,
                   std::map<std::string, double>& totals) {
    double best = -1.0;
    for (const auto& i : group) best = std::max(best, cell.at({dataset, i}));
    std::vector<const std::string*> winners;
    for (const auto& i : group)
      if (cell.at({dataset, i}) == best) winners.push_back(&i);
    for (const auto* w : winners)
      totals[*w] += 1.0 / static_cast<double>(winners.size());
  };

  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& i : indices) groups[category_of.at(i)].push_back(i);

  WinningRates rates;
  std::map<std::string, double> g_tot, c_tot;
  for (const auto& i : indices) {
    g_tot[i] = 0.0;
    c_tot[i] = 0.0;
  }
  for (const auto& d : datasets) {
    award(indices, d, g_tot);
    for (const auto& [cat, members] : groups) award(members, d, c_tot);
  }
  for (const auto& i : indices) {
    rates.global[i] = g_tot[i] / static_cast<double>(datasets.size());
    rates.within_category[i] = c_tot[i] / static_cast<double>(datasets.size());
  }
  return rates;
}

std::vector<SweepRow> sparsity_sweep(const ExperimentConfig& cfg, const Graph& g,
                                     const std::vector<double>& training_fractions) {
  if (training_fractions.empty())
    throw ParameterError("no training fractions given");
  for (double f : training_fractions)
    if (!(f > 0.0 && f < 1.0))
      throw ParameterError("training fractions must lie in (0,1)");
  std::vector<SweepRow> rows;
  for (double f : training_fractions) {
    ExperimentConfig sub = cfg;
    sub.probe_fraction = 1.0 - f;
    for (auto& r : run_experiment(sub, g)) rows.push_back({f, std::move(r)});
  }
  return rows;
}

}  // namespace linkpred
