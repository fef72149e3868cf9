#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkpred/global_baselines.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/score_matrix.hpp"
#include "linkpred/split.hpp"

namespace linkpred {

enum class BaseIndex { CN, RA, CRA, Katz, LO, SPM };
enum class Enhancement { None, CF, SCF };

// One scoring pipeline: a base index optionally passed through cf or scf.
struct IndexSpec {
  BaseIndex base = BaseIndex::CN;
  Enhancement enh = Enhancement::None;

  std::string name() const;      // canonical form, e.g. "ra+scf"
  std::string category() const;  // base name, e.g. "ra"
  bool is_dense() const {
    return base == BaseIndex::Katz || base == BaseIndex::LO ||
           base == BaseIndex::SPM;
  }
  bool operator==(const IndexSpec&) const = default;
};

// Parses "cn", "ra+scf", "katz", ... Throws ParameterError listing the valid
// spellings on anything else.
IndexSpec parse_index_spec(const std::string& text);
std::vector<IndexSpec> parse_index_list(const std::string& comma_separated);

// The full nine-index comparison set: {cn,ra,cra} x {base,cf,scf}.
std::vector<IndexSpec> standard_index_set();

struct BaselineParams {
  std::optional<double> katz_beta;  // unset: min(0.01, 0.5/lambda_max) per graph
  double lo_alpha = 0.1;
  double spm_fraction = 0.1;
  int spm_selections = 30;
  NodeId dense_cap = kDefaultDenseCap;
};

enum class AucMode { Exact, Sampled };

struct ExperimentConfig {
  std::string dataset = "graph";
  std::vector<IndexSpec> indices;
  double probe_fraction = 0.1;
  int runs = 100;
  std::uint64_t master_seed = 1;
  AucMode auc_mode = AucMode::Exact;
  std::int64_t auc_samples = 1000000;  // used in Sampled mode
  BaselineParams baselines;
  int threads = 0;  // <= 0: hardware concurrency
};

struct IndexResult {
  std::string dataset;
  std::string index;
  double auc_mean = 0.0;
  double auc_std = 0.0;  // sample standard deviation over runs
  int runs = 0;
  double probe_fraction = 0.0;
  double seconds = 0.0;  // scoring + evaluation wall time summed over runs
};

// Exact AUC of Eq.-style pairwise comparison, computed from rank statistics
// over the probe and nonobserved score multisets (implicit zeros included);
// the |E^P| * |U\E| pair product is never materialized. Ties count half.
double auc_exact(const ScoreMatrix& scores, const TrainProbeSplit& split);

// Unbiased sampled estimator: n independent (probe, nonobserved) draws with
// replacement. Deterministic for a fixed seed.
double auc_sampled(const ScoreMatrix& scores, const TrainProbeSplit& split,
                   std::int64_t n, std::uint64_t seed);

// Score one index spec on a training graph. `run_seed` feeds only the
// stochastic baselines (SPM selections).
ScoreMatrix compute_index(const Graph& train, const IndexSpec& spec,
                          const BaselineParams& params, std::uint64_t run_seed);

// Split/score/evaluate `cfg.runs` times. Run i draws its split with seed
// derive_seed(master_seed, i); every configured index sees the same split,
// so per-network comparisons are paired. Runs execute concurrently; results
// do not depend on scheduling.
std::vector<IndexResult> run_experiment(const ExperimentConfig& cfg,
                                        const Graph& g);

struct WinningRates {
  std::map<std::string, double> within_category;  // R_c per index
  std::map<std::string, double> global;           // R_g per index
};

// Tournament scores over a complete (dataset x index) AUC table: per dataset
// the best index earns 1, an m-way tie earns 1/m each; rates divide by the
// dataset count. R_c compares within `category_of` groups, R_g across all.
// Throws ParameterError if any cell of the table is missing.
WinningRates winning_rates(const std::vector<IndexResult>& table,
                           const std::map<std::string, std::string>& category_of);

std::map<std::string, std::string> default_categories(
    const std::vector<IndexSpec>& specs);

struct SweepRow {
  double training_fraction = 0.0;
  IndexResult result;
};

// Robustness sweep: rerun the experiment at probe_fraction = 1 - f for each
// training fraction f. Output is plot-ready long format.
std::vector<SweepRow> sparsity_sweep(const ExperimentConfig& cfg, const Graph& g,
                                     const std::vector<double>& training_fractions);

}  // namespace linkpred
