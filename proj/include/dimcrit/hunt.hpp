#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dimcrit/embed_search.hpp"

namespace dimcrit {

inline constexpr int kHuntVertexBudget = 7;

// Lexicographically smallest upper-triangle adjacency code over all vertex
// orderings (bits in column order (0,1),(0,2),(1,2),(0,3),...). At most 8
// vertices.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

// One representative per isomorphism class, by vertex count then code.
std::vector<Graph> enumerate_graphs(int vertices);
std::vector<Graph> enumerate_connected_graphs(int min_vertices, int max_vertices);

struct DropCandidate {
  Graph graph;
  std::optional<Edge> edge;
  std::optional<Vertex> vertex;
  DimensionEstimate before;
  DimensionEstimate after;
  // Deletion leaves an isolated vertex; dim is then read under the
  // distinct-point convention.
  bool isolated_after = false;

  int certified_drop() const { return before.lower - after.upper; }
  int possible_drop() const { return before.upper - after.lower; }
};

struct HuntReport {
  int graphs_examined = 0;
  int deletions_examined = 0;
  int max_certified_drop = 0;
  std::vector<DropCandidate> certified;  // certified drop >= 2
  std::vector<DropCandidate> undecided;  // drop >= 2 not ruled out
  std::vector<DropCandidate> witnesses;  // known family examples
};

/// Searches all connected graphs up to max_vertices for an edge whose
/// deletion provably lowers dim by 2 or more.
HuntReport hunt_edge_drop(int max_vertices, const SearchConfig& cfg);

/// Same for vertex deletions; K_2 + C_6 with an apex removed is always
/// evaluated as a known drop-2 witness.
HuntReport hunt_vertex_drop(int max_vertices, const SearchConfig& cfg);

}  // namespace dimcrit
