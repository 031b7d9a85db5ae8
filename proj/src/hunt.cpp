#include "dimcrit/hunt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace dimcrit {

namespace {

constexpr int kCanonicalMaxVertices = 8;

int pair_count(int n) { return n * (n - 1) / 2; }

// Branch and bound over vertex orderings. Position j of the ordering fixes
// column j of the code, so a partial ordering fixes a prefix; a prefix that
// already exceeds the best complete code is cut.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
    used_.assign(n_, false);
    order_.assign(n_, -1);
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    best_ = ~std::uint64_t{0};
    extend(0, 0);
    return best_;
  }

  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  // Bits are written most significant first; `filled` bits of `prefix` are
  // meaningful.
  void extend(int position, std::uint64_t prefix) {
    const int total = pair_count(n_);
    if (position == n_) {
      if (prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < position; ++i) {
        const int bit = pair_count(position) + i;
        if (g_.adjacent(order_[i], v)) next |= std::uint64_t{1} << (total - 1 - bit);
      }
      const int filled = pair_count(position + 1);
      const int free_bits = total - filled;
      // Smallest completion of this prefix is the prefix itself.
      if (best_ != ~std::uint64_t{0} &&
          (next >> free_bits) > (best_ >> free_bits))
        continue;
      used_[v] = true;
      order_[position] = v;
      extend(position + 1, next);
      used_[v] = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  std::uint64_t best_ = 0;
};

void check_canonical_size(const Graph& g) {
  if (g.vertex_count() > kCanonicalMaxVertices)
    throw DomainError("canonical form supports at most 8 vertices");
}

void check_budget(int max_vertices) {
  if (max_vertices > kHuntVertexBudget)
    throw DomainError("hunt budget exceeded: at most " + std::to_string(kHuntVertexBudget) +
                      " vertices");
  if (max_vertices < 2) throw DomainError("hunt needs at least 2 vertices");
}

class EstimateCache {
 public:
  explicit EstimateCache(const SearchConfig& cfg) : cfg_(cfg) {}

  // Keyed by isomorphism class; the stored estimate (and its embedding)
  // refers to the canonical labelling.
  const DimensionEstimate& get(const Graph& g) {
    const Graph canon = canonical_form(g);
    auto it = cache_.find({canon.vertex_count(), canonical_code(canon)});
    if (it == cache_.end()) {
      it = cache_.emplace(std::make_pair(canon.vertex_count(), canonical_code(canon)),
                          estimate_dimension(canon, cfg_))
               .first;
    }
    return it->second;
  }

 private:
  const SearchConfig& cfg_;
  std::map<std::pair<int, std::uint64_t>, DimensionEstimate> cache_;
};

void record(HuntReport& report, DropCandidate cand) {
  const int certified = cand.certified_drop();
  report.max_certified_drop = std::max(report.max_certified_drop, certified);
  if (certified >= 2)
    report.certified.push_back(std::move(cand));
  else if (cand.possible_drop() >= 2)
    report.undecided.push_back(std::move(cand));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  check_canonical_size(g);
  return Canonicalizer(g).run();
}

Graph canonical_form(const Graph& g) {
  check_canonical_size(g);
  if (g.vertex_count() <= 1) return g;
  Canonicalizer c(g);
  c.run();
  const auto& order = c.best_order();
  std::vector<int> position(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) position[order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(make_edge(position[e.u], position[e.v]));
  return Graph(g.vertex_count(), std::move(edges));
}

std::vector<Graph> enumerate_graphs(int vertices) {
  if (vertices < 0 || vertices > kCanonicalMaxVertices)
    throw DomainError("enumeration supports 0..8 vertices");
  if (vertices <= 1) return {Graph(vertices)};
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  const int prev = vertices - 1;
  for (const auto& base : enumerate_graphs(prev)) {
    for (std::uint32_t mask = 0; mask < (1u << prev); ++mask) {
      std::vector<Edge> edges = base.edges();
      for (int i = 0; i < prev; ++i)
        if (mask & (1u << i)) edges.push_back({i, prev});
      Graph g = canonical_form(Graph(vertices, std::move(edges)));
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_code(a) < canonical_code(b);
  });
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int min_vertices, int max_vertices) {
  std::vector<Graph> out;
  for (int v = std::max(min_vertices, 1); v <= max_vertices; ++v)
    for (auto& g : enumerate_graphs(v))
      if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

HuntReport hunt_edge_drop(int max_vertices, const SearchConfig& cfg) {
  check_budget(max_vertices);
  cfg.validate();
  EstimateCache cache(cfg);
  HuntReport report;
  for (const auto& g : enumerate_connected_graphs(2, max_vertices)) {
    ++report.graphs_examined;
    const DimensionEstimate before = cache.get(g);
    for (const auto& e : g.edges()) {
      ++report.deletions_examined;
      const Graph minus = delete_edge(g, e);
      DropCandidate cand{g, e, std::nullopt, before, cache.get(minus),
                         has_isolated_vertex(minus)};
      record(report, std::move(cand));
    }
  }
  return report;
}

HuntReport hunt_vertex_drop(int max_vertices, const SearchConfig& cfg) {
  check_budget(max_vertices);
  cfg.validate();
  EstimateCache cache(cfg);
  HuntReport report;
  for (const auto& g : enumerate_connected_graphs(2, max_vertices)) {
    ++report.graphs_examined;
    const DimensionEstimate before = cache.get(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      ++report.deletions_examined;
      const Graph minus = delete_vertex(g, v);
      DropCandidate cand{g, std::nullopt, v, before, cache.get(minus),
                         has_isolated_vertex(minus)};
      record(report, std::move(cand));
    }
  }

  // K_2 + C_6 has 8 vertices, beyond the enumeration; vertex 0 is a clique
  // vertex and its removal leaves the wheel W_6.
  const Graph join = build_join_clique_cycle({2, 6});
  const Graph wheel = delete_vertex(join, 0);
  report.witnesses.push_back(DropCandidate{join, std::nullopt, 0, estimate_dimension(join, cfg),
                                           estimate_dimension(wheel, cfg),
                                           has_isolated_vertex(wheel)});
  return report;
}

}  // namespace dimcrit
