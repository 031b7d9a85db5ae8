#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimcrit/graph.hpp"

namespace dimcrit {

// Dimension of G(alpha, beta, gamma), gamma counting parts of size >= 3.
int multipartite_formula(int alpha, int beta, int gamma);

enum class DimensionBasis {
  Formula,
  // One part of size >= 2: an edgeless graph, which needs R^1 only because
  // its points must be distinct.
  EdgelessConvention,
};

struct MultipartiteDimension {
  int value = 0;
  DimensionBasis basis = DimensionBasis::Formula;
};

MultipartiteDimension multipartite_dimension(const PartitionSpec& spec);

// Same, but accepts any part list (including empty or single-part lists that
// arise after deleting vertices).
int dimension_of_parts(std::vector<int> parts);

enum class CriticalityRule {
  CompleteGraph,       // K_a, a >= 3
  FourCycle,           // C_4 = G(0,2,0)
  Claw,                // K_{1,3} = G(1,0,1)
  K23,                 // K_{2,3} = G(0,1,1)
  AlphaZeroGamma,      // G(a,0,g), g >= 2
  PartAtLeast4,
  K2,
  AlphaOneZero,        // G(a,1,0), a >= 1
  AlphaOneOne,         // G(a,1,1), a >= 1
  AlphaTwoZero,        // G(a,2,0), a >= 1
  AlphaZeroOne,        // G(a,0,1), a >= 2
  BetaGammaAtLeast3,   // beta >= 1, beta + gamma >= 3
};

std::string to_string(CriticalityRule rule);

struct CriticalityVerdict {
  bool is_critical = false;
  CriticalityRule rule = CriticalityRule::K2;
  std::string witness;
};

/// Decides dimension-criticality of a complete multipartite graph from its
/// part sizes alone. Requires at least two parts.
///
/// Parts of size >= 4 are checked first; otherwise the spec is matched
/// against the critical families K_a (a >= 3), C_4, K_{1,3}, K_{2,3} and
/// G(a,0,g) with g >= 2, and every remaining shape is assigned the clause
/// whose dimension-preserving deletion rules it out. The witness names that
/// deletion.
CriticalityVerdict classify_multipartite_criticality(const PartitionSpec& spec);

// Edges grouped by the (unordered) sizes of the two parts they join. For a
// complete multipartite graph these are exactly the edge orbits of the
// automorphism group.
struct EdgeOrbit {
  int larger_part = 0;
  int smaller_part = 0;
  Edge representative;  // in build_multipartite labelling
  long long edge_count = 0;
};

std::vector<EdgeOrbit> multipartite_edge_orbits(const PartitionSpec& spec);

struct DeletionRow {
  EdgeOrbit orbit;
  // Merging the endpoints of the deleted edge into one size-2 part gives a
  // complete multipartite supergraph of G - e.
  PartitionSpec containing;
  int lower = 0;
  int upper = 0;
  std::string lower_basis;
  std::string upper_basis;

  bool exact() const { return lower == upper; }
};

/// Dimension of G - e for one edge per orbit, bracketed analytically.
///
/// Upper bounds come from the containing supergraph, from G itself and from
/// the path-forest test; lower bounds from complete multipartite subgraphs
/// of G - e (vertex deletions, moving an endpoint into the other endpoint's
/// part, and exhaustive enumeration for small graphs). Rows that stay open
/// are closed numerically by resolve_deletion_table().
std::vector<DeletionRow> multipartite_deletion_table(const PartitionSpec& spec);

// Vertex-count cap for the exhaustive multipartite-subgraph enumeration.
inline constexpr int kMultipartiteSubgraphCutoff = 9;

struct MultipartiteSubgraph {
  int dimension = 0;
  PartitionSpec spec;
  std::vector<std::vector<Vertex>> parts;
};

// Largest formula dimension over complete multipartite subgraphs (not
// necessarily induced, at least two parts). Empty above the cutoff.
std::optional<MultipartiteSubgraph> best_multipartite_subgraph(const Graph& g);

}  // namespace dimcrit
