// linkpred: batch CLI over the link-prediction library.
//
// Subcommands: stats, predict, evaluate, benchmark, sweep. Exit codes:
// 0 success, 1 runtime/numerical error, 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "linkpred/errors.hpp"
#include "linkpred/evaluation.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/registry.hpp"
#include "linkpred/stats.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace linkpred;

namespace {

std::string fmt(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, x);
  return buf;
}

struct LoadedDataset {
  std::string id;
  Graph graph;
};

// A dataset argument is either a path to an edge-list file or a registered
// id; registered datasets are validated against their recorded (N, M).
LoadedDataset load_dataset(const std::string& name,
                           const std::string& registry_path) {
  if (fs::exists(name) && fs::is_regular_file(name)) {
    ParseSummary summary;
    Graph g = parse_edge_list_file(name, &summary);
    if (summary.duplicate_edges || summary.self_loops)
      std::cerr << "warning: " << name << ": dropped "
                << summary.duplicate_edges << " duplicate edge(s) and "
                << summary.self_loops << " self-loop(s)\n";
    return {fs::path(name).stem().string(), std::move(g)};
  }
  if (fs::exists(registry_path)) {
    auto registry = DatasetRegistry::load(registry_path);
    if (const DatasetEntry* e = registry.find(name)) {
      if (!registry.available(*e))
        throw ParameterError("dataset not found: '" + name +
                             "' is registered but its file is missing at " +
                             registry.resolved_path(*e) +
                             " (see data/README.md for sources)");
      return {e->id, registry.load_graph(*e)};
    }
  }
  throw ParameterError("dataset not found: '" + name +
                       "' is neither a file nor a registered id");
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << contents;
}

// ---------------------------------------------------------------- stats ----

struct StatsOpts {
  std::string dataset;
  std::string registry = "data/registry.txt";
  std::string format = "csv";
  std::string out;
};

int cmd_stats(const StatsOpts& opt) {
  auto [id, g] = load_dataset(opt.dataset, opt.registry);
  NetworkStats s = compute_stats(g);
  std::string text;
  if (opt.format == "json") {
    json j;
    j["dataset"] = id;
    j["n_nodes"] = s.n_nodes;
    j["n_edges"] = s.n_edges;
    j["avg_degree"] = s.avg_degree;
    j["avg_clustering"] = s.avg_clustering;
    j["avg_shortest_path"] = s.avg_shortest_path;
    j["assortativity"] = s.assortativity;
    j["assortativity_degenerate"] = s.assortativity_degenerate;
    j["largest_component_size"] = s.largest_component_size;
    text = j.dump(2) + "\n";
  } else {
    text =
        "dataset,n,m,avg_degree,avg_clustering,avg_shortest_path,"
        "assortativity,assortativity_degenerate\n";
    text += id + "," + std::to_string(s.n_nodes) + "," +
            std::to_string(s.n_edges) + "," + fmt(s.avg_degree, 4) + "," +
            fmt(s.avg_clustering, 4) + "," + fmt(s.avg_shortest_path, 4) + "," +
            fmt(s.assortativity, 4) + "," +
            (s.assortativity_degenerate ? "true" : "false") + "\n";
  }
  if (opt.out.empty()) std::cout << text;
  else write_file(opt.out, text);
  return 0;
}

// -------------------------------------------------------------- predict ----

struct PredictOpts {
  std::string dataset;
  std::string registry = "data/registry.txt";
  std::string index = "cn";
  int top = 20;
  std::string out;
  BaselineParams baselines;
};

int cmd_predict(const PredictOpts& opt) {
  if (opt.top < 1) throw ParameterError("--top must be >= 1");
  auto [id, g] = load_dataset(opt.dataset, opt.registry);
  IndexSpec spec = parse_index_spec(opt.index);
  ScoreMatrix scores = compute_index(g, spec, opt.baselines, /*run_seed=*/0);

  // Rank nonobserved pairs: score descending, then the lexicographic label
  // pair so equal scores emit in a deterministic order.
  struct Candidate {
    double score;
    std::string lu, lv;
  };
  auto label_pair = [&](NodeId u, NodeId v) {
    std::string a = g.label(u), b = g.label(v);
    if (b < a) std::swap(a, b);
    return std::make_pair(a, b);
  };
  std::vector<Candidate> ranked;
  scores.for_each_pair([&](NodeId u, NodeId v, double s) {
    if (g.has_edge(u, v)) return;
    auto [a, b] = label_pair(u, v);
    ranked.push_back({s, a, b});
  });
  std::sort(ranked.begin(), ranked.end(), [](const Candidate& a,
                                             const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.lu, a.lv) < std::tie(b.lu, b.lv);
  });
  const auto k = static_cast<std::size_t>(opt.top);
  const auto positive = static_cast<std::size_t>(std::count_if(
      ranked.begin(), ranked.end(), [](const Candidate& c) { return c.score > 0.0; }));
  if (positive < k && ranked.size() < static_cast<std::size_t>(
                          g.node_count()) * (g.node_count() - 1) / 2 -
                          static_cast<std::size_t>(g.edge_count())) {
    // The implicit zero-scored pairs outrank any stored negative score, so
    // merge them in at their proper rank, in label order among themselves.
    std::vector<NodeId> by_label(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) by_label[i] = i;
    std::sort(by_label.begin(), by_label.end(),
              [&](NodeId a, NodeId b) { return g.label(a) < g.label(b); });
    std::vector<Candidate> zeros;
    for (std::size_t i = 0; i < by_label.size() && positive + zeros.size() < k; ++i)
      for (std::size_t j = i + 1;
           j < by_label.size() && positive + zeros.size() < k; ++j) {
        NodeId u = by_label[i], v = by_label[j];
        if (g.has_edge(u, v) || scores.score(u, v) != 0.0) continue;
        zeros.push_back({0.0, g.label(u), g.label(v)});
      }
    ranked.insert(ranked.end(), zeros.begin(), zeros.end());
    std::sort(ranked.begin(), ranked.end(), [](const Candidate& a,
                                               const Candidate& b) {
      if (a.score != b.score) return a.score > b.score;
      return std::tie(a.lu, a.lv) < std::tie(b.lu, b.lv);
    });
  }
  if (ranked.size() > k) ranked.resize(k);

  std::string text = "label_u,label_v,score\n";
  for (const auto& c : ranked)
    text += c.lu + "," + c.lv + "," + fmt(c.score, 6) + "\n";
  if (opt.out.empty()) std::cout << text;
  else write_file(opt.out, text);
  return 0;
}

// ------------------------------------------------------------- evaluate ----

struct EvalOpts {
  std::string registry = "data/registry.txt";
  std::string indices = "cn,ra,cra";
  double probe = 0.1;
  int runs = 100;
  std::uint64_t seed = 1;
  std::string auc = "exact";
  std::string out_dir = ".";
  std::string format = "csv,json";
  int threads = 0;
  bool no_timing = false;
  BaselineParams baselines;
};

ExperimentConfig make_config(const EvalOpts& opt, const std::string& dataset_id) {
  ExperimentConfig cfg;
  cfg.dataset = dataset_id;
  cfg.indices = parse_index_list(opt.indices);
  cfg.probe_fraction = opt.probe;
  cfg.runs = opt.runs;
  cfg.master_seed = opt.seed;
  cfg.threads = opt.threads;
  cfg.baselines = opt.baselines;
  if (opt.auc == "exact") {
    cfg.auc_mode = AucMode::Exact;
  } else if (opt.auc.rfind("sampled:", 0) == 0) {
    cfg.auc_mode = AucMode::Sampled;
    try {
      cfg.auc_samples = std::stoll(opt.auc.substr(8));
    } catch (const std::exception&) {
      throw ParameterError("bad sample count in --auc '" + opt.auc + "'");
    }
  } else {
    throw ParameterError("--auc must be 'exact' or 'sampled:N'");
  }
  return cfg;
}

std::string results_csv(const std::vector<IndexResult>& rows, bool timing) {
  std::string text = "dataset,index,auc_mean,auc_std,runs,probe_fraction,seconds\n";
  for (const auto& r : rows)
    text += r.dataset + "," + r.index + "," + fmt(r.auc_mean, 6) + "," +
            fmt(r.auc_std, 6) + "," + std::to_string(r.runs) + "," +
            fmt(r.probe_fraction, 6) + "," + fmt(timing ? r.seconds : 0.0, 3) +
            "\n";
  return text;
}

json results_json(const std::vector<IndexResult>& rows, bool timing) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["dataset"] = r.dataset;
    j["index"] = r.index;
    j["auc_mean"] = r.auc_mean;
    j["auc_std"] = r.auc_std;
    j["runs"] = r.runs;
    j["probe_fraction"] = r.probe_fraction;
    j["seconds"] = timing ? r.seconds : 0.0;
    arr.push_back(std::move(j));
  }
  return arr;
}

void print_results(const std::vector<IndexResult>& rows) {
  std::printf("%-12s %-10s %10s %10s %6s %10s\n", "dataset", "index",
              "auc_mean", "auc_std", "runs", "seconds");
  for (const auto& r : rows)
    std::printf("%-12s %-10s %10s %10s %6d %10s\n", r.dataset.c_str(),
                r.index.c_str(), fmt(r.auc_mean, 4).c_str(),
                fmt(r.auc_std, 4).c_str(), r.runs, fmt(r.seconds, 3).c_str());
}

void check_format(const std::string& format) {
  if (format.find("csv") == std::string::npos &&
      format.find("json") == std::string::npos)
    throw ParameterError("--format must name csv, json, or both");
}

int cmd_evaluate(const std::string& dataset, const EvalOpts& opt) {
  check_format(opt.format);
  auto [id, g] = load_dataset(dataset, opt.registry);
  ExperimentConfig cfg = make_config(opt, id);
  auto rows = run_experiment(cfg, g);
  print_results(rows);
  fs::create_directories(opt.out_dir);
  const bool timing = !opt.no_timing;
  if (opt.format.find("csv") != std::string::npos)
    write_file((fs::path(opt.out_dir) / (id + "_evaluation.csv")).string(),
               results_csv(rows, timing));
  if (opt.format.find("json") != std::string::npos)
    write_file((fs::path(opt.out_dir) / (id + "_evaluation.json")).string(),
               results_json(rows, timing).dump(2) + "\n");
  return 0;
}

// ------------------------------------------------------------ benchmark ----

int cmd_benchmark(const std::vector<std::string>& datasets, const EvalOpts& opt) {
  check_format(opt.format);
  const auto specs = parse_index_list(opt.indices);
  std::vector<std::string> index_names;
  for (const auto& s : specs) index_names.push_back(s.name());

  std::vector<IndexResult> table;
  std::vector<std::string> used;
  for (const auto& name : datasets) {
    LoadedDataset ds;
    try {
      ds = load_dataset(name, opt.registry);
    } catch (const Error& e) {
      std::cerr << "warning: skipping '" << name << "': " << e.what() << "\n";
      continue;
    }
    ExperimentConfig cfg = make_config(opt, ds.id);
    auto rows = run_experiment(cfg, ds.graph);
    table.insert(table.end(), rows.begin(), rows.end());
    used.push_back(ds.id);
    print_results(rows);
  }
  if (used.empty())
    throw ParameterError("no usable datasets among the " +
                         std::to_string(datasets.size()) + " given");

  auto rates = winning_rates(table, default_categories(specs));
  std::map<std::string, double> avg_auc, secs;
  for (const auto& r : table) {
    avg_auc[r.index] += r.auc_mean / static_cast<double>(used.size());
    secs[r.index] += r.seconds;
  }

  // Wide layout: one row per network, one column per index, then the
  // winning-rate and average rows.
  std::string csv = "network";
  for (const auto& i : index_names) csv += "," + i;
  csv += "\n";
  for (const auto& d : used) {
    csv += d;
    for (const auto& i : index_names) {
      auto it = std::find_if(table.begin(), table.end(), [&](const IndexResult& r) {
        return r.dataset == d && r.index == i;
      });
      csv += "," + fmt(it->auc_mean, 4);
    }
    csv += "\n";
  }
  csv += "R_c";
  for (const auto& i : index_names) csv += "," + fmt(rates.within_category[i], 4);
  csv += "\nR_g";
  for (const auto& i : index_names) csv += "," + fmt(rates.global[i], 4);
  csv += "\navg_auc";
  for (const auto& i : index_names) csv += "," + fmt(avg_auc[i], 4);
  csv += "\n";

  json j;
  j["indices"] = index_names;
  j["datasets"] = json::object();
  for (const auto& d : used) {
    json row;
    for (const auto& r : table)
      if (r.dataset == d) {
        row[r.index] = {{"auc_mean", r.auc_mean},
                        {"auc_std", r.auc_std},
                        {"seconds", opt.no_timing ? 0.0 : r.seconds}};
      }
    j["datasets"][d] = std::move(row);
  }
  j["winning_rates"] = {{"within_category", rates.within_category},
                        {"global", rates.global}};
  j["avg_auc"] = avg_auc;
  j["runs"] = opt.runs;
  j["probe_fraction"] = opt.probe;

  fs::create_directories(opt.out_dir);
  if (opt.format.find("csv") != std::string::npos)
    write_file((fs::path(opt.out_dir) / "benchmark.csv").string(), csv);
  if (opt.format.find("json") != std::string::npos)
    write_file((fs::path(opt.out_dir) / "benchmark.json").string(),
               j.dump(2) + "\n");
  std::cout << "\n" << csv;
  return 0;
}

// ---------------------------------------------------------------- sweep ----

struct SweepOpts {
  std::string category = "cn";
  std::string indices;  // overrides --category when given
  std::string fractions = "0.5,0.55,0.6,0.65,0.7,0.75,0.8,0.85,0.9,0.95";
  std::string out;
};

int cmd_sweep(const std::string& dataset, const EvalOpts& eval_opt,
              const SweepOpts& opt) {
  auto [id, g] = load_dataset(dataset, eval_opt.registry);
  EvalOpts adjusted = eval_opt;
  if (!opt.indices.empty()) {
    adjusted.indices = opt.indices;
  } else {
    if (opt.category != "cn" && opt.category != "ra" && opt.category != "cra")
      throw ParameterError("--category must be cn, ra or cra");
    adjusted.indices =
        opt.category + "," + opt.category + "+cf," + opt.category + "+scf";
  }
  std::vector<double> fractions;
  std::string token;
  for (std::size_t i = 0; i <= opt.fractions.size(); ++i) {
    if (i == opt.fractions.size() || opt.fractions[i] == ',') {
      if (token.empty()) continue;
      try {
        fractions.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw ParameterError("bad training fraction '" + token + "'");
      }
      token.clear();
    } else {
      token += opt.fractions[i];
    }
  }
  ExperimentConfig cfg = make_config(adjusted, id);
  auto rows = sparsity_sweep(cfg, g, fractions);

  std::string csv = "training_fraction,index,auc_mean,auc_std\n";
  for (const auto& r : rows)
    csv += fmt(r.training_fraction, 4) + "," + r.result.index + "," +
           fmt(r.result.auc_mean, 6) + "," + fmt(r.result.auc_std, 6) + "\n";
  if (opt.out.empty()) std::cout << csv;
  else write_file(opt.out, csv);
  return 0;
}

void add_baseline_flags(CLI::App* cmd, EvalOpts& opt) {
  cmd->add_option("--katz-beta", [&opt](const std::vector<std::string>& v) {
        opt.baselines.katz_beta = std::stod(v[0]);
        return true;
      },
      "Katz damping (default: min(0.01, 0.5/lambda_max) per training graph)");
  cmd->add_option("--lo-alpha", opt.baselines.lo_alpha, "LO free parameter");
  cmd->add_option("--spm-fraction", opt.baselines.spm_fraction,
                  "SPM perturbation fraction of training links");
  cmd->add_option("--spm-selections", opt.baselines.spm_selections,
                  "SPM independent edge selections to average");
  cmd->add_option("--dense-cap", opt.baselines.dense_cap,
                  "refuse dense baselines above this node count");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link prediction toolkit: local similarity indices, their "
               "CF/SCF enhancements, global baselines, and the AUC "
               "evaluation protocol"};
  app.require_subcommand(1);

  StatsOpts stats_opt;
  auto* stats_cmd = app.add_subcommand("stats", "structural statistics of a network");
  stats_cmd->add_option("dataset", stats_opt.dataset, "dataset id or edge-list path")
      ->required();
  stats_cmd->add_option("--registry", stats_opt.registry, "dataset registry file");
  stats_cmd->add_option("--format", stats_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  stats_cmd->add_option("--out", stats_opt.out, "write the row here instead of stdout");

  PredictOpts predict_opt;
  EvalOpts predict_eval;  // reuse baseline flag storage
  auto* predict_cmd =
      app.add_subcommand("predict", "rank nonobserved pairs of a network");
  predict_cmd->add_option("dataset", predict_opt.dataset)->required();
  predict_cmd->add_option("--registry", predict_opt.registry);
  predict_cmd->add_option("--index", predict_opt.index,
                          "index spec, e.g. cn, ra+scf, katz");
  predict_cmd->add_option("--top", predict_opt.top, "pairs to emit");
  predict_cmd->add_option("--out", predict_opt.out);
  add_baseline_flags(predict_cmd, predict_eval);

  EvalOpts eval_opt;
  std::string eval_dataset;
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "AUC of the chosen indices under random train/probe splits");
  eval_cmd->add_option("dataset", eval_dataset)->required();
  eval_cmd->add_option("--registry", eval_opt.registry);
  eval_cmd->add_option("--indices", eval_opt.indices,
                       "comma-separated index specs");
  eval_cmd->add_option("--probe", eval_opt.probe, "probe fraction (0,1)");
  eval_cmd->add_option("--runs", eval_opt.runs, "independent splits to average");
  eval_cmd->add_option("--seed", eval_opt.seed, "master seed");
  eval_cmd->add_option("--auc", eval_opt.auc, "exact | sampled:N");
  eval_cmd->add_option("--out", eval_opt.out_dir, "report directory");
  eval_cmd->add_option("--format", eval_opt.format, "csv, json, or csv,json");
  eval_cmd->add_option("--threads", eval_opt.threads, "0 = hardware");
  eval_cmd->add_flag("--no-timing", eval_opt.no_timing,
                     "zero the seconds column for byte-stable reports");
  add_baseline_flags(eval_cmd, eval_opt);

  EvalOpts bench_opt;
  std::vector<std::string> bench_datasets;
  auto* bench_cmd = app.add_subcommand(
      "benchmark", "full comparison table with winning rates over datasets");
  bench_cmd->add_option("datasets", bench_datasets)->required()->expected(-1);
  bench_cmd->add_option("--registry", bench_opt.registry);
  bench_opt.indices = "cn,cn+cf,cn+scf,ra,ra+cf,ra+scf,cra,cra+cf,cra+scf";
  bench_cmd->add_option("--indices", bench_opt.indices);
  bench_cmd->add_option("--probe", bench_opt.probe);
  bench_cmd->add_option("--runs", bench_opt.runs);
  bench_cmd->add_option("--seed", bench_opt.seed);
  bench_cmd->add_option("--auc", bench_opt.auc);
  bench_cmd->add_option("--out", bench_opt.out_dir);
  bench_cmd->add_option("--format", bench_opt.format);
  bench_cmd->add_option("--threads", bench_opt.threads);
  bench_cmd->add_flag("--no-timing", bench_opt.no_timing);
  add_baseline_flags(bench_cmd, bench_opt);

  EvalOpts sweep_eval;
  SweepOpts sweep_opt;
  std::string sweep_dataset;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "AUC against training-set size, plot-ready long CSV");
  sweep_cmd->add_option("dataset", sweep_dataset)->required();
  sweep_cmd->add_option("--registry", sweep_eval.registry);
  sweep_cmd->add_option("--category", sweep_opt.category, "cn, ra or cra");
  sweep_cmd->add_option("--indices", sweep_opt.indices,
                        "explicit index list (overrides --category)");
  sweep_cmd->add_option("--fractions", sweep_opt.fractions,
                        "comma-separated training fractions");
  sweep_cmd->add_option("--runs", sweep_eval.runs);
  sweep_cmd->add_option("--seed", sweep_eval.seed);
  sweep_cmd->add_option("--auc", sweep_eval.auc);
  sweep_cmd->add_option("--threads", sweep_eval.threads);
  sweep_cmd->add_option("--out", sweep_opt.out);
  add_baseline_flags(sweep_cmd, sweep_eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (stats_cmd->parsed()) return cmd_stats(stats_opt);
    if (predict_cmd->parsed()) {
      predict_opt.baselines = predict_eval.baselines;
      return cmd_predict(predict_opt);
    }
    if (eval_cmd->parsed()) return cmd_evaluate(eval_dataset, eval_opt);
    if (bench_cmd->parsed()) return cmd_benchmark(bench_datasets, bench_opt);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_dataset, sweep_eval, sweep_opt);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
