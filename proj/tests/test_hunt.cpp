#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dimcrit/hunt.hpp"

using namespace dimcrit;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.vertex_count(), edges);
}

// Minimum code over every vertex ordering, no pruning.
std::uint64_t brute_code(const Graph& g) {
  const int n = g.vertex_count();
  const int total = n * (n - 1) / 2;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << (total - 1 - bit);
    best = std::min(best, code);
  } while (std::next_permutation(order.begin(), order.end()));
  return n <= 1 ? 0 : best;
}

SearchConfig seeded(std::uint64_t seed) {
  SearchConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("canonical code matches exhaustive minimum") {
  std::mt19937 rng(12);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.push_back({i, j});
    const Graph g(n, edges);
    CHECK(canonical_code(g) == brute_code(g));

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(relabel(g, perm)) == canonical_code(g));
    CHECK(isomorphic_bruteforce(canonical_form(g), g));
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
  CHECK(canonical_code(build_path(4)) != canonical_code(build_multipartite(PartitionSpec({3, 1}))));
  CHECK_THROWS_AS(canonical_code(Graph(9)), DomainError);
}

TEST_CASE("graph counts match the known sequences") {
  // Unlabelled graphs and connected graphs on n vertices.
  const std::vector<std::size_t> all = {1, 1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected = {1, 1, 1, 2, 6, 21, 112};
  for (int n = 0; n <= 6; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(graphs.size() == all[n]);
    if (n >= 1) CHECK(enumerate_connected_graphs(n, n).size() == connected[n]);
    for (std::size_t i = 0; i + 1 < graphs.size(); ++i)
      CHECK(canonical_code(graphs[i]) < canonical_code(graphs[i + 1]));
  }
}

TEST_CASE("edge drops are at most 1 up to 4 vertices") {
  const auto report = hunt_edge_drop(4, seeded(1));
  CHECK(report.graphs_examined == 1 + 2 + 6);
  CHECK(report.certified.empty());
  CHECK(report.max_certified_drop == 1);
}

TEST_CASE("single deletions of known graphs") {
  const auto cfg = seeded(2);
  const Graph k4 = build_complete(4);
  const auto k4_before = estimate_dimension(k4, cfg);
  const auto k4_after = estimate_dimension(delete_edge(k4, {0, 1}), cfg);
  CHECK(k4_before.lower - k4_after.upper == 1);
  CHECK(k4_before.upper - k4_after.lower == 1);

  const Graph c4 = build_cycle(4);
  const auto c4_before = estimate_dimension(c4, cfg);
  const auto c4_after = estimate_dimension(delete_edge(c4, {0, 1}), cfg);
  CHECK(c4_before.lower - c4_after.upper == 1);

  const Graph k5 = build_complete(5);
  CHECK(estimate_dimension(k5, cfg).lower - estimate_dimension(delete_vertex(k5, 2), cfg).upper ==
        1);

  // Removing the centre of K_{1,3} leaves three isolated vertices: 2 -> 1.
  const Graph claw = build_multipartite(PartitionSpec({3, 1}));
  const Graph leaves = delete_vertex(claw, 3);
  CHECK(has_isolated_vertex(leaves));
  CHECK(estimate_dimension(claw, cfg).lower == 2);
  CHECK(estimate_dimension(leaves, cfg).upper == 1);
}

TEST_CASE("vertex hunt reports the join witness") {
  const auto report = hunt_vertex_drop(4, seeded(3));
  CHECK(report.certified.empty());
  REQUIRE(report.witnesses.size() == 1);
  const auto& w = report.witnesses[0];
  CHECK(w.vertex == 0);
  CHECK(w.before.exact());
  CHECK(w.before.upper == 4);
  CHECK(w.after.exact());
  CHECK(w.after.upper == 2);
  CHECK(w.certified_drop() == 2);
  CHECK_FALSE(w.isolated_after);
}

TEST_CASE("hunt budget") {
  CHECK_THROWS_AS(hunt_edge_drop(8, seeded(0)), DomainError);
  CHECK_THROWS_AS(hunt_vertex_drop(8, seeded(0)), DomainError);
  CHECK_THROWS_AS(hunt_edge_drop(1, seeded(0)), DomainError);
}
