#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dimcrit/geometry.hpp"
#include "dimcrit/graph.hpp"
#include "dimcrit/multipartite.hpp"

namespace dimcrit {

struct SearchConfig {
  int restarts = 50;
  int max_iterations = 5000;
  double residual_tolerance = 1e-7;
  std::uint64_t seed = 0;
  double init_scale = 1.0;
  // Basin hops per restart after the first descent.
  int hops = 30;
  // 0 picks DIMCRIT_THREADS, else the hardware concurrency.
  int threads = 0;

  void validate() const;
};

// splitmix64 of (master, restart): the seed of one restart.
std::uint64_t restart_seed(std::uint64_t master, int restart);

// Sum over edges of (|x_u - x_v|^2 - 1)^2; rows of x are vertices.
double stress_objective(const Graph& g, const Eigen::MatrixXd& x);
// Per-vertex gradient, 4 (|x_u - x_v|^2 - 1)(x_u - x_v) summed over edges.
Eigen::MatrixXd stress_gradient(const Graph& g, const Eigen::MatrixXd& x);

// Spherically symmetric Gaussian start from one restart seed.
Eigen::MatrixXd random_configuration(int vertices, int d, double scale,
                                     std::uint64_t seed);

struct SearchOutcome {
  std::optional<Embedding> embedding;
  int restart = -1;  // lowest successful restart index
  int restarts_run = 0;
};

SearchOutcome find_embedding_detail(const Graph& g, int d, const SearchConfig& cfg);

/// Multi-start least-squares search for a unit-distance drawing in R^d.
///
/// Each restart runs damped Gauss-Newton (Levenberg-Marquardt) on the edge
/// residuals |x_u - x_v|^2 - 1 from a random start. A restart is accepted
/// when every edge length is within the residual tolerance of 1 and all
/// points are at least the separation tolerance apart; the accepted
/// configuration is then polished towards 1e-12. A restart that stalls in a
/// local minimum, or collapses vertices together, hops: one vertex is
/// redrawn and the descent repeated, keeping the hop when it lowers the
/// objective. The lowest accepted restart index wins, so results do not
/// depend on thread scheduling.
std::optional<Embedding> find_embedding(const Graph& g, int d, const SearchConfig& cfg);

/// Certified two-sided bracket on dim(G).
struct DimensionEstimate {
  int lower = 0;
  LowerProvenance lower_provenance = LowerProvenance::VertexCount;
  int upper = 0;
  UpperProvenance upper_provenance = UpperProvenance::SimplexTrivial;
  // Recognized family ("multipartite [2,3]", "join K_2 + C_6"), if any.
  std::string family;
  // Present for embedding-found, simplex-trivial and path-forest uppers and
  // for joins with clique size >= 2.
  std::optional<Embedding> embedding;

  bool exact() const { return lower == upper; }
};

// Combinatorial lower bound: vertex count, path forests, cliques, complete
// multipartite subgraphs, and clique-plus-cycle subgraphs whose cycle cannot
// sit on the forced circle.
LowerBound certified_lower_bound(const Graph& g);

struct EstimateOptions {
  bool use_exact_families = true;
};

DimensionEstimate estimate_dimension(const Graph& g, const SearchConfig& cfg,
                                     EstimateOptions options = {});

enum class Verdict { Critical, NotCritical, Undecided };
std::string to_string(Verdict v);

struct EdgeOutcome {
  Edge edge;
  long long orbit_size = 1;
  DimensionEstimate estimate;  // of G - edge
  Verdict verdict = Verdict::Undecided;
};

struct CriticalityReport {
  DimensionEstimate graph_estimate;
  std::vector<EdgeOutcome> edges;
  Verdict overall = Verdict::Undecided;
};

// Verdict for deleting one edge, given certified estimates before and after.
Verdict edge_verdict(const DimensionEstimate& whole, const DimensionEstimate& minus);

/// Edge-by-edge criticality with certified bounds. Recognized families are
/// reduced to one representative edge per orbit. Requires a connected graph
/// with at least one edge.
CriticalityReport test_criticality(const Graph& g, const SearchConfig& cfg);

struct PruneStep {
  Edge edge;
  Verdict verdict = Verdict::Undecided;
  bool deleted = false;
  DimensionEstimate estimate;  // of (current graph) - edge
};

struct PruneResult {
  Graph graph;
  std::vector<PruneStep> deletions;
  std::vector<PruneStep> remaining;  // verdicts on the final graph
  int undecided = 0;
};

/// Deletes edges whose removal provably keeps dimension target_dim, always
/// the first such edge in lexicographic order, until none is left. Requires
/// a certified exact estimate equal to target_dim.
PruneResult prune_to_critical(const Graph& g, int target_dim, const SearchConfig& cfg);

/// Closes the open rows of multipartite_deletion_table() with estimate_dimension
/// on G - e (graphs up to 9 vertices).
std::vector<DeletionRow> resolve_deletion_table(const PartitionSpec& spec,
                                                const SearchConfig& cfg);

}  // namespace dimcrit
