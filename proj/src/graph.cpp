#include "dimcrit/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>

namespace dimcrit {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw DomainError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw DomainError("edge endpoint out of range");
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw DomainError("duplicate edge");
  for (const auto& e : edges_) {
    adj_[e.u * n_ + e.v] = 1;
    adj_[e.v * n_ + e.u] = 1;
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return adj_[a * n_ + b] != 0;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (Vertex w = 0; w < n_; ++w) d += adj_[v * n_ + w];
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w)
    if (adj_[v * n_ + w]) out.push_back(w);
  return out;
}

PartitionSpec::PartitionSpec(std::vector<int> part_sizes)
    : parts_(std::move(part_sizes)) {
  if (parts_.empty()) throw DomainError("partition must have at least one part");
  for (int p : parts_)
    if (p <= 0) throw DomainError("part sizes must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int PartitionSpec::vertex_count() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int PartitionSpec::alpha() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

int PartitionSpec::beta() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 2));
}

int PartitionSpec::gamma_3plus() const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [](int p) { return p >= 3; }));
}

int PartitionSpec::gamma_exact3() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 3));
}

bool PartitionSpec::has_part_at_least(int size) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [size](int p) { return p >= size; });
}

void JoinSpec::validate() const {
  if (clique_size < 1) throw DomainError("join clique size must be >= 1");
  if (cycle_length < 3) throw DomainError("join cycle length must be >= 3");
}

Graph build_multipartite(const PartitionSpec& spec) {
  std::vector<int> part_of;
  for (int p = 0; p < spec.part_count(); ++p)
    part_of.insert(part_of.end(), spec.parts()[p], p);
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph build_join_clique_cycle(const JoinSpec& spec) {
  spec.validate();
  const int n = spec.clique_size;
  const int m = spec.cycle_length;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n + m; ++b) edges.push_back({a, b});
  for (int i = 0; i < m; ++i)
    edges.push_back(make_edge(n + i, n + (i + 1) % m));
  return Graph(n + m, std::move(edges));
}

Graph build_complete(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph build_cycle(int m) {
  if (m < 3) throw DomainError("cycle length must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.push_back(make_edge(i, (i + 1) % m));
  return Graph(m, std::move(edges));
}

Graph build_path(int vertex_count) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) edges.push_back({i, i + 1});
  return Graph(vertex_count, std::move(edges));
}

Graph build_wheel(int m) {
  return build_join_clique_cycle(JoinSpec{1, m});
}

Graph delete_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e))
    throw DomainError("edge {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "} not in graph");
  std::vector<Edge> edges;
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.vertex_count(), std::move(edges));
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError("vertex " + std::to_string(v) + " not in graph");
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0)
      edges.push_back(make_edge(index[e.u], index[e.v]));
  return Graph(static_cast<int>(keep.size()), std::move(edges));
}

namespace {

// Component label per vertex; returns the component count.
int label_components(const Graph& g, std::vector<int>& label) {
  const int n = g.vertex_count();
  label.assign(n, -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<int> label;
  return label_components(g, label) <= 1;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_path_forest(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  std::vector<int> label;
  const int components = label_components(g, label);
  // A forest has exactly n - c edges.
  return g.edge_count() == g.vertex_count() - components;
}

namespace {

void extend_clique(const std::vector<std::uint32_t>& nbr, std::uint32_t clique,
                   std::uint32_t candidates, std::uint32_t& best) {
  if (candidates == 0) {
    if (std::popcount(clique) > std::popcount(best)) best = clique;
    return;
  }
  if (std::popcount(clique) + std::popcount(candidates) <= std::popcount(best))
    return;
  while (candidates != 0) {
    if (std::popcount(clique) + std::popcount(candidates) <= std::popcount(best))
      return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    extend_clique(nbr, clique | (1u << v), candidates & nbr[v], best);
  }
}

std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<Vertex> best;
  for (Vertex start : order) {
    std::vector<Vertex> clique{start};
    for (Vertex v : order) {
      if (v == start) continue;
      bool ok = std::all_of(clique.begin(), clique.end(),
                            [&](Vertex c) { return g.adjacent(c, v); });
      if (ok) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

std::vector<Vertex> find_large_clique(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  if (n > kExhaustiveCliqueCutoff) return greedy_clique(g);
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : g.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  std::uint32_t best = 1;
  extend_clique(nbr, 0, (1u << n) - 1, best);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (best & (1u << v)) out.push_back(v);
  return out;
}

std::string to_string(LowerProvenance p) {
  switch (p) {
    case LowerProvenance::VertexCount: return "vertex-count";
    case LowerProvenance::PathForest: return "path-forest";
    case LowerProvenance::Clique: return "clique";
    case LowerProvenance::ExactFamily: return "exact-family";
    case LowerProvenance::MultipartiteSubgraph: return "multipartite-subgraph";
    case LowerProvenance::JoinSubgraph: return "join-subgraph";
  }
  return "unknown";
}

std::string to_string(UpperProvenance p) {
  switch (p) {
    case UpperProvenance::EmbeddingFound: return "embedding-found";
    case UpperProvenance::SimplexTrivial: return "simplex-trivial";
    case UpperProvenance::PathForest: return "path-forest";
    case UpperProvenance::ExactFamily: return "exact-family";
  }
  return "unknown";
}

LowerBound dimension_lower_bound_detail(const Graph& g) {
  LowerBound best{0, LowerProvenance::VertexCount};
  // Distinct points: two or more vertices never fit in R^0.
  if (g.vertex_count() >= 2) best = {1, LowerProvenance::VertexCount};
  if (!is_path_forest(g)) best = {2, LowerProvenance::PathForest};
  const int omega = static_cast<int>(find_large_clique(g).size());
  if (omega - 1 > best.value) best = {omega - 1, LowerProvenance::Clique};
  return best;
}

int dimension_lower_bound(const Graph& g) {
  return dimension_lower_bound_detail(g).value;
}

int dimension_upper_bound_trivial(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (is_path_forest(g)) return 1;
  return n - 1;
}

std::optional<MultipartiteStructure> recognize_multipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  // Parts are the classes of non-adjacency, which must be an equivalence.
  std::vector<int> part_of(n, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[v] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.push_back({});
    for (Vertex w = v; w < n; ++w) {
      if (w == v || !g.adjacent(v, w)) {
        if (part_of[w] >= 0) return std::nullopt;
        part_of[w] = id;
        parts.back().push_back(w);
      }
    }
  }
  if (parts.size() < 2) return std::nullopt;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if ((part_of[a] != part_of[b]) != g.adjacent(a, b)) return std::nullopt;

  // Relabel parts so that indices follow the descending spec order.
  std::vector<int> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return parts[a].size() > parts[b].size();
  });
  std::vector<int> rank(parts.size());
  std::vector<int> sizes;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
    sizes.push_back(static_cast<int>(parts[order[i]].size()));
  }
  for (auto& p : part_of) p = rank[p];
  return MultipartiteStructure{PartitionSpec(std::move(sizes)), std::move(part_of)};
}

std::optional<JoinStructure> recognize_join(const Graph& g) {
  const int total = g.vertex_count();
  std::vector<Vertex> universal;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < total; ++v)
    (g.degree(v) == total - 1 ? universal : rest).push_back(v);
  const int m = static_cast<int>(rest.size());
  if (universal.empty() || m < 4) return std::nullopt;
  // The non-universal vertices must induce a single cycle.
  const Graph cyc = induced_subgraph(g, rest);
  for (Vertex v = 0; v < m; ++v)
    if (cyc.degree(v) != 2) return std::nullopt;
  if (!is_connected(cyc)) return std::nullopt;

  std::vector<Vertex> order{0};
  Vertex prev = -1;
  Vertex cur = 0;
  while (static_cast<int>(order.size()) < m) {
    auto nb = cyc.neighbors(cur);
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  JoinStructure out;
  out.spec = JoinSpec{static_cast<int>(universal.size()), m};
  out.clique = universal;
  for (Vertex i : order) out.cycle.push_back(rest[i]);
  return out;
}

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n > 8) throw DomainError("brute-force isomorphism limited to 8 vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = std::all_of(a.edges().begin(), a.edges().end(), [&](const Edge& e) {
      return b.adjacent(perm[e.u], perm[e.v]);
    });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace dimcrit
