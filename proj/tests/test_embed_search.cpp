#include <cstring>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "dimcrit/embed_search.hpp"

using namespace dimcrit;

namespace {

SearchConfig seeded(std::uint64_t seed) {
  SearchConfig cfg;
  cfg.seed = seed;
  return cfg;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

bool same_bits(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::memcmp(a.data() + i, b.data() + i, sizeof(double)) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("config validation") {
  SearchConfig cfg;
  CHECK(cfg.restarts == 50);
  CHECK(cfg.max_iterations == 5000);
  CHECK(cfg.residual_tolerance == 1e-7);
  CHECK(cfg.init_scale == 1.0);
  CHECK_NOTHROW(cfg.validate());
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = SearchConfig{};
  cfg.residual_tolerance = -1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = SearchConfig{};
  cfg.init_scale = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("restart seeds") {
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(restart_seed(42, i));
  CHECK(seen.size() == 1000);
  CHECK(restart_seed(42, 3) == restart_seed(42, 3));
  CHECK(restart_seed(42, 3) != restart_seed(43, 3));
}

TEST_CASE("random configuration is reproducible and centred") {
  const auto a = random_configuration(400, 3, 2.0, 9);
  const auto b = random_configuration(400, 3, 2.0, 9);
  CHECK(same_bits(a, b));
  CHECK(std::abs(a.mean()) < 0.3);
  // Sample standard deviation near the scale.
  const double var = (a.array() - a.mean()).square().sum() / (a.size() - 1);
  CHECK(std::sqrt(var) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("stress gradient matches central differences") {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng, 6, 0.6);
    const Eigen::MatrixXd x = random_configuration(6, 3, 1.0, 100 + t);
    const Eigen::MatrixXd grad = stress_gradient(g, x);
    const double h = 1e-6;
    for (int i = 0; i < x.rows(); ++i)
      for (int k = 0; k < x.cols(); ++k) {
        Eigen::MatrixXd up = x, down = x;
        up(i, k) += h;
        down(i, k) -= h;
        const double fd = (stress_objective(g, up) - stress_objective(g, down)) / (2 * h);
        CHECK(grad(i, k) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
      }
  }
}

TEST_CASE("stress objective is zero on a unit drawing") {
  Eigen::MatrixXd square(4, 2);
  square << 0, 0, 1, 0, 1, 1, 0, 1;
  CHECK(stress_objective(build_cycle(4), square) == 0.0);
  CHECK(stress_gradient(build_cycle(4), square).norm() == 0.0);
}

TEST_CASE("find_embedding examples") {
  const auto cfg = seeded(1);
  const Graph c4 = build_cycle(4);
  const auto rhombus = find_embedding(c4, 2, cfg);
  REQUIRE(rhombus);
  CHECK(verify_embedding(c4, *rhombus).passed);

  CHECK_FALSE(find_embedding(build_complete(4), 2, cfg));

  const Graph k23 = build_multipartite(PartitionSpec({2, 3}));
  const auto in3 = find_embedding(k23, 3, cfg);
  REQUIRE(in3);
  CHECK(verify_embedding(k23, *in3).passed);
  CHECK_FALSE(find_embedding(k23, 2, cfg));

  // K_{3,3}: formula 4, cross-checked by search.
  const Graph k33 = build_multipartite(PartitionSpec({3, 3}));
  const auto in4 = find_embedding(k33, 4, cfg);
  REQUIRE(in4);
  CHECK(verify_embedding(k33, *in4).passed);
  CHECK_FALSE(find_embedding(k33, 3, cfg));

  // Trivial sizes.
  CHECK(find_embedding(Graph(1), 0, cfg));
  CHECK_FALSE(find_embedding(Graph(2), 0, cfg));
}

TEST_CASE("accepted embeddings are polished and separated") {
  const auto cfg = seeded(2);
  const Graph w6 = build_wheel(6);
  const auto detail = find_embedding_detail(w6, 2, cfg);
  REQUIRE(detail.embedding);
  const auto report = verify_embedding(w6, *detail.embedding, 1e-11);
  CHECK(report.passed);
  CHECK(report.min_separation > 1e-6);
  CHECK(detail.restart >= 0);
  CHECK(detail.restart < cfg.restarts);
}

TEST_CASE("search is deterministic and independent of thread count") {
  SearchConfig one = seeded(77);
  one.threads = 1;
  SearchConfig many = seeded(77);
  many.threads = 4;
  const Graph g = build_multipartite(PartitionSpec({3, 2, 1}));
  const auto a = find_embedding_detail(g, 4, one);
  const auto b = find_embedding_detail(g, 4, many);
  const auto c = find_embedding_detail(g, 4, one);
  REQUIRE(a.embedding);
  REQUIRE(b.embedding);
  REQUIRE(c.embedding);
  CHECK(a.restart == b.restart);
  CHECK(same_bits(a.embedding->points, b.embedding->points));
  CHECK(same_bits(a.embedding->points, c.embedding->points));
}

TEST_CASE("estimate_dimension examples") {
  const auto cfg = seeded(5);

  const auto w6 = estimate_dimension(build_wheel(6), cfg);
  CHECK(w6.exact());
  CHECK(w6.upper == 2);
  CHECK(w6.upper_provenance == UpperProvenance::EmbeddingFound);
  REQUIRE(w6.embedding);
  CHECK(verify_embedding(build_wheel(6), *w6.embedding).passed);

  const Graph join = build_join_clique_cycle({2, 6});
  const auto j = estimate_dimension(join, cfg);
  CHECK(j.exact());
  CHECK(j.upper == 4);
  CHECK(j.lower_provenance == LowerProvenance::ExactFamily);
  CHECK(j.family == "join K_2 + C_6");
  REQUIRE(j.embedding);
  CHECK(verify_embedding(join, *j.embedding, 1e-9).passed);

  // Without family recognition the clique K_4 alone gives 3; the bracket
  // stays sound either way.
  const auto plain = estimate_dimension(join, cfg, {.use_exact_families = false});
  CHECK(plain.lower >= 3);
  CHECK(plain.lower <= 4);
  CHECK(plain.upper >= 4);

  const auto p5 = estimate_dimension(build_path(5), cfg);
  CHECK(p5.exact());
  CHECK(p5.upper == 1);
  CHECK(p5.upper_provenance == UpperProvenance::PathForest);

  const auto single = estimate_dimension(Graph(1), cfg);
  CHECK(single.upper == 0);
  const auto empty3 = estimate_dimension(Graph(3), cfg);
  CHECK(empty3.exact());
  CHECK(empty3.upper == 1);

  const auto k33 = estimate_dimension(build_multipartite(PartitionSpec({3, 3})), cfg);
  CHECK(k33.exact());
  CHECK(k33.upper == 4);
  CHECK(k33.family == "complete-multipartite [3,3]");
}

TEST_CASE("lower bounds from subgraphs") {
  // K_2 + C_5 minus a clique-cycle edge: at least the K_4 clique, never
  // above the join itself.
  const Graph g = delete_edge(build_join_clique_cycle({2, 5}), {0, 2});
  const auto lb = certified_lower_bound(g);
  CHECK(lb.value >= 3);
  CHECK(lb.value <= 4);

  // A triangle with a C_5 in its common neighbourhood forces 5.
  const Graph k3c5 = build_join_clique_cycle({3, 5});
  CHECK(certified_lower_bound(k3c5).value == 5);
}

TEST_CASE("multipartite estimates agree with the formula") {
  const auto cfg = seeded(11);
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int largest) {
    if (rem == 0) {
      if (cur.size() < 2) return;
      const PartitionSpec spec(cur);
      const auto est = estimate_dimension(build_multipartite(spec), cfg,
                                          {.use_exact_families = false});
      CHECK(est.exact());
      CHECK(est.upper == multipartite_dimension(spec).value);
      return;
    }
    for (int p = std::min(rem, largest); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  for (int n = 2; n <= 6; ++n) rec(n, n);
}

TEST_CASE("bounds respect subgraph monotonicity") {
  std::mt19937 rng(2024);
  const auto cfg = seeded(13);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(rng, n, 0.55);
    const auto whole = estimate_dimension(g, cfg);
    CHECK(whole.lower <= whole.upper);
    if (whole.embedding && whole.upper_provenance != UpperProvenance::ExactFamily)
      CHECK(verify_embedding(g, *whole.embedding).passed);
    for (const auto& e : g.edges()) {
      const auto minus = estimate_dimension(delete_edge(g, e), cfg);
      CHECK(minus.upper <= whole.upper);
      CHECK(minus.lower <= whole.upper);
    }
  }
}

TEST_CASE("edge verdicts") {
  DimensionEstimate whole{3, LowerProvenance::Clique, 3, UpperProvenance::EmbeddingFound};
  DimensionEstimate lower{2, LowerProvenance::Clique, 2, UpperProvenance::EmbeddingFound};
  DimensionEstimate same{3, LowerProvenance::Clique, 3, UpperProvenance::EmbeddingFound};
  DimensionEstimate open{2, LowerProvenance::Clique, 3, UpperProvenance::SimplexTrivial};
  CHECK(edge_verdict(whole, lower) == Verdict::Critical);
  CHECK(edge_verdict(whole, same) == Verdict::NotCritical);
  CHECK(edge_verdict(whole, open) == Verdict::Undecided);
}

TEST_CASE("test_criticality examples") {
  const auto cfg = seeded(3);
  const auto c5 = test_criticality(build_cycle(5), cfg);
  CHECK(c5.overall == Verdict::Critical);
  CHECK(c5.edges.size() == 5);

  const auto k2 = test_criticality(build_complete(2), cfg);
  CHECK(k2.overall == Verdict::NotCritical);
  REQUIRE(k2.edges.size() == 1);
  CHECK(k2.edges[0].estimate.upper == 1);

  const auto k33 = test_criticality(build_multipartite(PartitionSpec({3, 3})), cfg);
  CHECK(k33.overall == Verdict::Critical);
  REQUIRE(k33.edges.size() == 1);
  CHECK(k33.edges[0].orbit_size == 9);

  const auto w5 = test_criticality(build_wheel(5), cfg);
  long long covered = 0;
  for (const auto& e : w5.edges) covered += e.orbit_size;
  CHECK(covered == build_wheel(5).edge_count());

  CHECK_THROWS_AS(test_criticality(Graph(4, {{0, 1}, {2, 3}}), cfg), DomainError);
  CHECK_THROWS_AS(test_criticality(Graph(1), cfg), DomainError);
}

TEST_CASE("resolved deletion tables confirm the classifier") {
  const auto cfg = seeded(21);
  for (const auto& parts : std::vector<std::vector<int>>{{3, 2}, {3, 3}, {2, 2}, {3, 1}, {3, 3, 1}}) {
    const PartitionSpec spec(parts);
    const int d = multipartite_dimension(spec).value;
    const auto rows = resolve_deletion_table(spec, cfg);
    for (const auto& r : rows) {
      CHECK(r.exact());
      CHECK(r.upper < d);
    }
  }
  // K_{2,3} minus an edge has dimension 2.
  const auto k23 = resolve_deletion_table(PartitionSpec({3, 2}), cfg);
  REQUIRE(k23.size() == 1);
  CHECK(k23[0].upper == 2);
}

TEST_CASE("prune_to_critical") {
  const auto cfg = seeded(8);

  const auto c6 = prune_to_critical(build_cycle(6), 2, cfg);
  CHECK(c6.graph == build_cycle(6));
  CHECK(c6.deletions.empty());
  CHECK(c6.undecided == 0);

  const auto k4 = prune_to_critical(build_complete(4), 3, cfg);
  CHECK(k4.graph == build_complete(4));
  CHECK(k4.deletions.empty());

  // K_2 + C_5: the cycle edges survive pruning.
  const JoinSpec spec{2, 5};
  const auto pruned = prune_to_critical(build_join_clique_cycle(spec), 4, cfg);
  for (int i = 0; i < 5; ++i) {
    const Edge cycle_edge = make_edge(2 + i, 2 + (i + 1) % 5);
    CHECK(pruned.graph.has_edge(cycle_edge));
  }
  const auto final_est = estimate_dimension(pruned.graph, cfg);
  CHECK(final_est.lower == 4);
  REQUIRE(final_est.embedding);
  CHECK(final_est.embedding->dimension == 4);
  CHECK(verify_embedding(pruned.graph, *final_est.embedding).passed);
  CHECK_FALSE(find_embedding(pruned.graph, 3, cfg));

  CHECK_THROWS_AS(prune_to_critical(build_cycle(6), 3, cfg), DomainError);
}

TEST_CASE("verdict tags") {
  CHECK(to_string(Verdict::Critical) == "critical");
  CHECK(to_string(Verdict::NotCritical) == "not-critical");
  CHECK(to_string(Verdict::Undecided) == "undecided");
}
