#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dimcrit/graph.hpp"

using namespace dimcrit;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.vertex_count(), edges);
}

// Largest clique by checking every vertex subset.
int brute_clique_number(const Graph& g) {
  const int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !g.adjacent(i, j)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("graph construction normalizes and validates edges") {
  const Graph g(4, {{2, 1}, {0, 3}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(-1), DomainError);
}

TEST_CASE("partition spec counts") {
  const PartitionSpec spec({1, 3, 2, 4, 1, 3});
  CHECK(spec.parts() == std::vector<int>{4, 3, 3, 2, 1, 1});
  CHECK(spec.alpha() == 2);
  CHECK(spec.beta() == 1);
  CHECK(spec.gamma_3plus() == 3);
  CHECK(spec.gamma_exact3() == 2);
  CHECK(spec.alpha() + spec.beta() + spec.gamma_3plus() == spec.part_count());
  CHECK(spec.vertex_count() == 14);
  CHECK(spec.has_part_at_least(4));
  CHECK_THROWS_AS(PartitionSpec(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(PartitionSpec({2, 0}), DomainError);
}

TEST_CASE("build_multipartite") {
  const Graph k23 = build_multipartite(PartitionSpec({2, 3}));
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(build_multipartite(PartitionSpec({1, 1, 1})) == build_complete(3));
  CHECK(build_multipartite(PartitionSpec({3, 3})).edge_count() == 9);

  // Edge count oracle: pairs minus within-part pairs.
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> parts(1 + rng() % 4);
    for (int& p : parts) p = 1 + static_cast<int>(rng() % 4);
    const PartitionSpec spec(parts);
    const int n = spec.vertex_count();
    int within = 0;
    for (int p : parts) within += p * (p - 1) / 2;
    CHECK(build_multipartite(spec).edge_count() == n * (n - 1) / 2 - within);
  }
}

TEST_CASE("build_join_clique_cycle") {
  const Graph j26 = build_join_clique_cycle({2, 6});
  CHECK(j26.vertex_count() == 8);
  CHECK(j26.edge_count() == 19);

  const Graph j16 = build_join_clique_cycle({1, 6});
  CHECK(j16.edge_count() == 12);
  CHECK(isomorphic_bruteforce(j16, build_wheel(6)));

  CHECK(build_join_clique_cycle({3, 3}).edge_count() == 15);
  CHECK(isomorphic_bruteforce(build_join_clique_cycle({3, 3}), build_complete(6)));

  for (int n = 1; n <= 4; ++n)
    for (int m = 3; m <= 9; ++m)
      CHECK(build_join_clique_cycle({n, m}).edge_count() == n * (n - 1) / 2 + m + n * m);

  CHECK_THROWS_AS(build_join_clique_cycle({0, 5}), DomainError);
  CHECK_THROWS_AS(build_join_clique_cycle({2, 2}), DomainError);
}

TEST_CASE("deletions") {
  CHECK(isomorphic_bruteforce(delete_edge(build_complete(3), {0, 2}), build_path(3)));

  // build_multipartite puts the size-3 part first, so vertex 3 is in the pair.
  const Graph k23 = build_multipartite(PartitionSpec({2, 3}));
  CHECK(isomorphic_bruteforce(delete_vertex(k23, 3), build_multipartite(PartitionSpec({1, 3}))));

  CHECK(isomorphic_bruteforce(delete_vertex(build_join_clique_cycle({2, 6}), 0), build_wheel(6)));

  CHECK_THROWS_AS(delete_edge(build_path(3), {0, 2}), DomainError);
  CHECK_THROWS_AS(delete_vertex(build_path(3), 3), DomainError);

  // Order-preserving reindexing.
  const Graph p4 = build_path(4);
  CHECK(delete_vertex(p4, 0) == build_path(3));
  CHECK(delete_vertex(p4, 1) == Graph(3, {{1, 2}}));
}

TEST_CASE("vertex deletions commute up to isomorphism") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, 0.5);
    const int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % (n - 1));
    if (b >= a) ++b;
    const Graph ab = delete_vertex(delete_vertex(g, a), b > a ? b - 1 : b);
    const Graph ba = delete_vertex(delete_vertex(g, b), a > b ? a - 1 : a);
    CHECK(isomorphic_bruteforce(ab, ba));
  }
}

TEST_CASE("path forests") {
  CHECK(is_path_forest(build_path(5)));
  CHECK_FALSE(is_path_forest(build_cycle(4)));
  CHECK_FALSE(is_path_forest(build_multipartite(PartitionSpec({3, 1}))));
  CHECK(is_path_forest(Graph(0)));
  CHECK(is_path_forest(Graph(3)));
  CHECK(is_path_forest(Graph(5, {{0, 1}, {3, 4}})));
  CHECK_FALSE(is_path_forest(Graph(7, {{0, 1}, {1, 2}, {2, 0}, {4, 5}})));
}

TEST_CASE("dimension_lower_bound") {
  CHECK(dimension_lower_bound(build_complete(5)) == 4);
  CHECK(dimension_lower_bound(build_cycle(7)) == 2);
  CHECK(dimension_lower_bound(Graph(1)) == 0);
  CHECK(dimension_lower_bound(Graph(0)) == 0);
  CHECK(dimension_lower_bound(Graph(2)) == 1);
  CHECK(dimension_lower_bound_detail(build_complete(5)).provenance == LowerProvenance::Clique);
  CHECK(dimension_lower_bound_detail(build_cycle(7)).provenance == LowerProvenance::PathForest);
}

TEST_CASE("dimension_upper_bound_trivial") {
  CHECK(dimension_upper_bound_trivial(build_complete(4)) == 3);
  CHECK(dimension_upper_bound_trivial(build_path(9)) == 1);
  CHECK(dimension_upper_bound_trivial(Graph(3)) == 1);
  CHECK(dimension_upper_bound_trivial(Graph(1)) == 0);
  CHECK(dimension_upper_bound_trivial(build_cycle(5)) == 4);
}

TEST_CASE("bounds are consistent on random graphs") {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng() % 10);
    const Graph g = random_graph(rng, n, 0.4);
    const int lower = dimension_lower_bound(g);
    CHECK(lower <= dimension_upper_bound_trivial(g));
    if (is_path_forest(g)) CHECK(lower <= 1);
    for (const auto& e : g.edges())
      CHECK(dimension_lower_bound(delete_edge(g, e)) <=
            dimension_upper_bound_trivial(delete_edge(g, e)));
  }
}

TEST_CASE("clique search matches subset enumeration") {
  std::mt19937 rng(3);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(rng, n, 0.6);
    const auto clique = find_large_clique(g);
    CHECK(is_clique(g, clique));
    CHECK(static_cast<int>(clique.size()) == brute_clique_number(g));
  }
  // Above the cutoff the result is still a clique.
  const Graph big = random_graph(rng, 16, 0.7);
  CHECK(is_clique(big, find_large_clique(big)));
}

TEST_CASE("connectivity predicates") {
  CHECK(is_connected(build_cycle(5)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(has_isolated_vertex(Graph(3, {{0, 1}})));
  CHECK_FALSE(has_isolated_vertex(build_path(3)));
}

TEST_CASE("recognize_multipartite survives relabelling") {
  std::mt19937 rng(17);
  const std::vector<std::vector<int>> specs = {{2, 3}, {1, 1, 1}, {3, 3, 1}, {4, 2, 2, 1}, {2, 2}};
  for (const auto& parts : specs) {
    const PartitionSpec spec(parts);
    const Graph g = build_multipartite(spec);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    const auto found = recognize_multipartite(h);
    REQUIRE(found);
    CHECK(found->spec == spec);
    for (const auto& e : h.edges())
      CHECK(found->part_of[e.u] != found->part_of[e.v]);
  }
  CHECK_FALSE(recognize_multipartite(build_cycle(5)));
  CHECK_FALSE(recognize_multipartite(build_path(4)));
  CHECK_FALSE(recognize_multipartite(Graph(3)));
}

TEST_CASE("recognize_join survives relabelling") {
  std::mt19937 rng(23);
  for (int n = 1; n <= 3; ++n)
    for (int m = 5; m <= 8; ++m) {
      const Graph g = build_join_clique_cycle({n, m});
      std::vector<int> perm(g.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = relabel(g, perm);
      const auto found = recognize_join(h);
      REQUIRE(found);
      CHECK(found->spec == JoinSpec{n, m});
      for (int i = 0; i < m; ++i)
        CHECK(h.adjacent(found->cycle[i], found->cycle[(i + 1) % m]));
    }
  CHECK_FALSE(recognize_join(build_cycle(6)));
  CHECK_FALSE(recognize_join(build_complete(5)));
}

TEST_CASE("provenance tags") {
  CHECK(to_string(LowerProvenance::Clique) == "clique");
  CHECK(to_string(LowerProvenance::ExactFamily) == "exact-family");
  CHECK(to_string(UpperProvenance::EmbeddingFound) == "embedding-found");
  CHECK(to_string(UpperProvenance::SimplexTrivial) == "simplex-trivial");
}
