#include <cmath>

#include "doctest.h"
#include "linkpred/errors.hpp"
#include "linkpred/evaluation.hpp"
#include "linkpred/local_indices.hpp"
#include "support.hpp"

using namespace linkpred;

namespace {

ScoreMatrix scores_from(NodeId n, std::vector<ScoreMatrix::Entry> entries) {
  return ScoreMatrix::from_entries(n, std::move(entries), "test");
}

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("defaults follow the standard protocol") {
  ExperimentConfig cfg;
  CHECK(cfg.probe_fraction == 0.1);
  CHECK(cfg.runs == 100);
  CHECK(cfg.baselines.spm_selections == 30);
  CHECK(cfg.baselines.dense_cap == 10000);
}

TEST_CASE("index spec parsing") {
  CHECK(parse_index_spec("cn").name() == "cn");
  CHECK(parse_index_spec("RA+SCF").name() == "ra+scf");
  CHECK(parse_index_spec("cra+cf").category() == "cra");
  CHECK(parse_index_spec("katz").is_dense());
  CHECK_THROWS_AS(parse_index_spec("bogus"), ParameterError);
  CHECK_THROWS_AS(parse_index_spec("cn+super"), ParameterError);
  CHECK(parse_index_list("cn, ra+scf,lo").size() == 3);
  CHECK_THROWS_AS(parse_index_list("cn,cn"), ParameterError);
  CHECK(standard_index_set().size() == 9);
}

TEST_CASE("perfect separation gives AUC 1") {
  // star5: hub 0, leaves 1..5; probe takes one spoke
  Graph g = oracle::star_graph(5);
  auto split = split_train_probe(g, 0.2, 3);
  REQUIRE(split.probe.size() == 1);
  auto scores = scores_from(6, {{split.probe[0].first, split.probe[0].second, 1.0}});
  CHECK(auc_exact(scores, split) == 1.0);
  CHECK(auc_sampled(scores, split, 5000, 1) == 1.0);
}

TEST_CASE("all-ties scores give AUC one half") {
  Graph g = random_gnp(12, 0.4, 8);
  auto split = split_train_probe(g, 0.2, 4);
  // empty score matrix: everything ties at the implicit zero
  CHECK(auc_exact(scores_from(12, {}), split) == 0.5);
  // same with a constant nonzero score everywhere
  std::vector<ScoreMatrix::Entry> all;
  for (NodeId u = 0; u < 12; ++u)
    for (NodeId v = u + 1; v < 12; ++v) all.push_back({u, v, 3.25});
  CHECK(auc_exact(scores_from(12, all), split) == 0.5);
}

TEST_CASE("n1=7 n2=2 n=10 gives 0.8") {
  // N=5: U = 10 pairs; train 3 edges, probe 2, nonobserved 5
  Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}});
  TrainProbeSplit split;
  split.train = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}});
  split.probe = {{1, 2}, {3, 4}};
  split.probe_fraction = 0.4;
  REQUIRE(split.nonobserved_pair_count() == 5);
  // probe (1,2)=5 beats all five nonobserved; probe (3,4)=1 beats two
  // (0.5, 0.2), ties two (1.0, 1.0), loses one (2.0)
  auto scores = scores_from(5, {{1, 2, 5.0},
                                {3, 4, 1.0},
                                {1, 3, 0.5},
                                {1, 4, 0.2},
                                {2, 3, 1.0},
                                {2, 4, 1.0},
                                {0, 4, 2.0}});
  CHECK(auc_exact(scores, split) == doctest::Approx(0.8));
  CHECK(auc_exact(scores, split) == oracle::auc_brute(scores, split));
}

TEST_CASE("exact AUC equals the brute-force double loop") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const NodeId n = 10 + static_cast<NodeId>(seed);  // up to 39
    Graph g = random_gnp(n, 0.25, 4000 + seed);
    if (g.edge_count() < 5) continue;
    auto split = split_train_probe(g, 0.2, seed);
    // discrete scores force ties across classes; also test index scores
    auto random = oracle::random_scores(n, 0.4, 4100 + seed, true);
    auto cn = score_cn(split.train);
    CHECK(auc_exact(random, split) == oracle::auc_brute(random, split));
    CHECK(auc_exact(cn, split) == oracle::auc_brute(cn, split));
  }
}

TEST_CASE("monotone transforms leave exact AUC unchanged") {
  Graph g = random_gnp(25, 0.25, 51);
  auto split = split_train_probe(g, 0.2, 52);
  auto s = score_ra(split.train);
  std::vector<ScoreMatrix::Entry> mapped;
  s.for_each_pair([&](NodeId u, NodeId v, double x) {
    mapped.push_back({u, v, std::exp(2.0 * x)});  // strictly increasing, >0
  });
  // the transform must also act on the implicit zeros; exp maps 0 to 1, so
  // shift the stored values instead: f(x) = exp(2x) - 1 keeps f(0) = 0
  for (auto& e : mapped) e.score -= 1.0;
  auto transformed = scores_from(25, std::move(mapped));
  CHECK(auc_exact(transformed, split) == auc_exact(s, split));
}

TEST_CASE("null scores hover at one half") {
  Graph g = random_gnp(40, 0.2, 61);
  auto split = split_train_probe(g, 0.1, 62);
  double sum = 0.0;
  const int assignments = 50;
  for (int i = 0; i < assignments; ++i) {
    std::vector<ScoreMatrix::Entry> entries;
    Rng rng(8000 + i);
    for (NodeId u = 0; u < 40; ++u)
      for (NodeId v = u + 1; v < 40; ++v)
        entries.push_back({u, v, rng.next_double() + 1e-9});
    sum += auc_exact(scores_from(40, std::move(entries)), split);
  }
  CHECK(std::abs(sum / assignments - 0.5) < 0.03);
}

TEST_CASE("sampled AUC converges to exact") {
  Graph g = random_gnp(50, 0.2, 71);
  auto split = split_train_probe(g, 0.1, 72);
  auto cn = score_cn(split.train);
  const double exact = auc_exact(cn, split);
  const double sampled = auc_sampled(cn, split, 1000000, 73);
  CHECK(std::abs(sampled - exact) < 0.01);
  // three binomial standard deviations at n = 1e6
  CHECK(std::abs(sampled - exact) <
        3.0 * std::sqrt(exact * (1.0 - exact) / 1e6) + 1e-9);
  CHECK(auc_sampled(cn, split, 1000000, 73) == sampled);  // deterministic
}

TEST_CASE("empty probe is rejected") {
  Graph g = random_gnp(10, 0.3, 81);
  TrainProbeSplit split;
  split.train = g;
  CHECK_THROWS_AS(auc_exact(scores_from(10, {}), split), ParameterError);
}

TEST_CASE("experiment runs are reproducible and paired") {
  Graph g = random_gnp(40, 0.25, 91);
  ExperimentConfig cfg;
  cfg.dataset = "gnp40";
  cfg.indices = parse_index_list("cn,cn+scf,ra");
  cfg.probe_fraction = 0.2;
  cfg.runs = 5;
  cfg.master_seed = 1234;
  auto a = run_experiment(cfg, g);
  auto b = run_experiment(cfg, g);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].auc_mean == b[i].auc_mean);
    CHECK(a[i].auc_std == b[i].auc_std);
    CHECK(a[i].index == b[i].index);
    CHECK(a[i].runs == 5);
  }
  // single-threaded result identical to the threaded one
  cfg.threads = 1;
  auto c = run_experiment(cfg, g);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].auc_mean == c[i].auc_mean);
}

TEST_CASE("experiment validation") {
  Graph g = random_gnp(20, 0.3, 92);
  ExperimentConfig cfg;
  cfg.indices = parse_index_list("cn");
  cfg.runs = 0;
  CHECK_THROWS_AS(run_experiment(cfg, g), ParameterError);
  cfg.runs = 1;
  cfg.probe_fraction = 1.5;
  CHECK_THROWS_AS(run_experiment(cfg, g), ParameterError);
  cfg.probe_fraction = 0.1;
  cfg.indices.clear();
  CHECK_THROWS_AS(run_experiment(cfg, g), ParameterError);
  cfg.indices = parse_index_list("katz");
  cfg.baselines.dense_cap = 10;
  CHECK_THROWS_AS(run_experiment(cfg, g), ResourceError);
}

TEST_CASE("failures name the run and the index") {
  Graph g = oracle::star_graph(9);  // lambda_max = 3
  ExperimentConfig cfg;
  cfg.indices = parse_index_list("cn,katz");
  cfg.probe_fraction = 0.2;
  cfg.runs = 2;
  cfg.baselines.katz_beta = 0.9;  // diverges
  try {
    run_experiment(cfg, g);
    FAIL("expected ParameterError");
  } catch (const ParameterError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("run ") != std::string::npos);
    CHECK(msg.find("index 'katz'") != std::string::npos);
  }
}

TEST_CASE("winning rates: unique, tied, and swept winners") {
  auto row = [](const char* d, const char* i, double auc) {
    IndexResult r;
    r.dataset = d;
    r.index = i;
    r.auc_mean = auc;
    return r;
  };
  std::map<std::string, std::string> cats{{"a", "g1"}, {"b", "g1"}, {"c", "g2"}};

  auto rates = winning_rates(
      {row("d1", "a", 0.9), row("d1", "b", 0.8), row("d1", "c", 0.8)}, cats);
  CHECK(rates.global["a"] == 1.0);
  CHECK(rates.global["b"] == 0.0);
  CHECK(rates.global["c"] == 0.0);
  // categories: a beats b within g1; c wins g2 alone
  CHECK(rates.within_category["a"] == 1.0);
  CHECK(rates.within_category["b"] == 0.0);
  CHECK(rates.within_category["c"] == 1.0);

  rates = winning_rates(
      {row("d1", "a", 0.9), row("d1", "b", 0.9), row("d1", "c", 0.8)}, cats);
  CHECK(rates.global["a"] == 0.5);
  CHECK(rates.global["b"] == 0.5);
  CHECK(rates.global["c"] == 0.0);
  // the global scores of one comparison always sum to 1, the per-category
  // scores to the number of categories
  double g_sum = 0.0, c_sum = 0.0;
  for (const auto& [_, v] : rates.global) g_sum += v;
  for (const auto& [_, v] : rates.within_category) c_sum += v;
  CHECK(g_sum == doctest::Approx(1.0));
  CHECK(c_sum == doctest::Approx(2.0));

  // three-way tie: 1/3 each
  std::map<std::string, std::string> flat{{"a", "g"}, {"b", "g"}, {"c", "g"}};
  rates = winning_rates(
      {row("d1", "a", 0.7), row("d1", "b", 0.7), row("d1", "c", 0.7)}, flat);
  CHECK(rates.global["a"] == doctest::Approx(1.0 / 3.0));

  // two datasets, all won by a
  rates = winning_rates({row("d1", "a", 0.9), row("d1", "b", 0.1),
                         row("d2", "a", 0.8), row("d2", "b", 0.2)},
                        cats);
  CHECK(rates.global["a"] == 1.0);

  // missing cell
  CHECK_THROWS_AS(
      winning_rates({row("d1", "a", 0.9), row("d1", "b", 0.8),
                     row("d2", "a", 0.7)},
                    cats),
      ParameterError);
}

TEST_CASE("sparsity sweep shape and consistency with the plain experiment") {
  Graph g = oracle::path_graph(100);
  ExperimentConfig cfg;
  cfg.dataset = "p100";
  cfg.indices = parse_index_list("cn,cn+scf");
  cfg.runs = 3;
  cfg.master_seed = 5;
  auto rows = sparsity_sweep(cfg, g, {0.5, 0.95});
  REQUIRE(rows.size() == 4);  // 2 fractions x 2 indices
  CHECK(rows[0].training_fraction == 0.5);
  CHECK(rows[2].training_fraction == 0.95);

  // training fraction 0.9 must reproduce probe_fraction 0.1 exactly
  Graph g2 = random_gnp(40, 0.3, 11);
  auto swept = sparsity_sweep(cfg, g2, {0.9});
  cfg.probe_fraction = 0.1;
  auto direct = run_experiment(cfg, g2);
  REQUIRE(swept.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i)
    CHECK(swept[i].result.auc_mean == direct[i].auc_mean);

  CHECK_THROWS_AS(sparsity_sweep(cfg, g2, {}), ParameterError);
  CHECK_THROWS_AS(sparsity_sweep(cfg, g2, {1.5}), ParameterError);
}

TEST_CASE("stored zeros never change exact AUC") {
  // from_entries drops exact zeros on construction, which is precisely the
  // invariant: a stored zero is indistinguishable from an implicit one
  Graph g = random_gnp(20, 0.3, 13);
  auto split = split_train_probe(g, 0.2, 14);
  std::vector<ScoreMatrix::Entry> with_zeros, without;
  Rng rng(15);
  for (NodeId u = 0; u < 20; ++u)
    for (NodeId v = u + 1; v < 20; ++v) {
      if (rng.next_double() < 0.3) {
        with_zeros.push_back({u, v, 0.0});
      } else if (rng.next_double() < 0.5) {
        const double s = rng.next_double();
        with_zeros.push_back({u, v, s});
        without.push_back({u, v, s});
      }
    }
  auto a = scores_from(20, std::move(with_zeros));
  auto b = scores_from(20, std::move(without));
  CHECK(a.entry_count() == b.entry_count());
  CHECK(auc_exact(a, split) == auc_exact(b, split));
}

}  // TEST_SUITE
