#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimcrit {

// Bad input to a domain operation (invalid spec, missing edge, violated
// precondition). The CLI maps this to exit status 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

/// Finite simple graph on the dense vertex set [0, vertex_count).
///
/// Edges are kept sorted lexicographically; an adjacency matrix is kept
/// alongside for constant-time lookups. Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
};

/// Part sizes of a complete multipartite graph, kept in descending order.
class PartitionSpec {
 public:
  PartitionSpec() = default;
  explicit PartitionSpec(std::vector<int> part_sizes);

  const std::vector<int>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int vertex_count() const;

  int alpha() const;         // parts of size 1
  int beta() const;          // parts of size 2
  int gamma_3plus() const;   // parts of size >= 3
  int gamma_exact3() const;  // parts of size exactly 3
  bool has_part_at_least(int size) const;

  bool operator==(const PartitionSpec&) const = default;

 private:
  std::vector<int> parts_;
};

// K_n + C_m: an n-clique joined to an m-cycle.
struct JoinSpec {
  int clique_size = 1;
  int cycle_length = 3;

  void validate() const;
  bool operator==(const JoinSpec&) const = default;
};

// Vertices 0..P-1 go to the first (largest) part, and so on.
Graph build_multipartite(const PartitionSpec& spec);
// Clique vertices are 0..n-1; cycle vertices n..n+m-1 in cyclic order.
Graph build_join_clique_cycle(const JoinSpec& spec);

Graph build_complete(int n);
Graph build_cycle(int m);
Graph build_path(int vertex_count);
Graph build_wheel(int m);  // hub is vertex 0

Graph delete_edge(const Graph& g, Edge e);
// Remaining vertices keep their relative order.
Graph delete_vertex(const Graph& g, Vertex v);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool is_path_forest(const Graph& g);

// Exhaustive below the cutoff, greedy above; always a genuine clique.
std::vector<Vertex> find_large_clique(const Graph& g);
inline constexpr int kExhaustiveCliqueCutoff = 12;

enum class LowerProvenance {
  VertexCount,
  PathForest,
  Clique,
  ExactFamily,
  MultipartiteSubgraph,
  JoinSubgraph,
};

enum class UpperProvenance {
  EmbeddingFound,
  SimplexTrivial,
  PathForest,
  ExactFamily,
};

std::string to_string(LowerProvenance p);
std::string to_string(UpperProvenance p);

struct LowerBound {
  int value = 0;
  LowerProvenance provenance = LowerProvenance::VertexCount;
};

LowerBound dimension_lower_bound_detail(const Graph& g);
int dimension_lower_bound(const Graph& g);
int dimension_upper_bound_trivial(const Graph& g);

struct MultipartiteStructure {
  PartitionSpec spec;
  std::vector<int> part_of;  // index into spec.parts() per vertex
};

// Recognizes complete multipartite graphs with at least two parts.
std::optional<MultipartiteStructure> recognize_multipartite(const Graph& g);

struct JoinStructure {
  JoinSpec spec;
  std::vector<Vertex> clique;
  std::vector<Vertex> cycle;  // cyclic order
};

// Recognizes K_n + C_m for m >= 4 (m = 3 is complete and handled as
// multipartite).
std::optional<JoinStructure> recognize_join(const Graph& g);

// Brute-force permutation check; only for small graphs (<= 8 vertices).
bool isomorphic_bruteforce(const Graph& a, const Graph& b);

}  // namespace dimcrit
