#include "dimcrit/embed_search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <thread>
#include <utility>

namespace dimcrit {

void SearchConfig::validate() const {
  if (restarts <= 0) throw DomainError("restarts must be positive");
  if (max_iterations <= 0) throw DomainError("max iterations must be positive");
  if (!(residual_tolerance > 0)) throw DomainError("residual tolerance must be positive");
  if (!(init_scale > 0)) throw DomainError("initial scale must be positive");
  if (threads < 0) throw DomainError("thread count must be non-negative");
  if (hops < 0) throw DomainError("hop count must be non-negative");
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in (0, 1), 53 random bits.
double unit_open(std::uint64_t& state) {
  return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::uint64_t restart_seed(std::uint64_t master, int restart) {
  std::uint64_t state = master ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(restart) + 1));
  splitmix64(state);
  return splitmix64(state);
}

Eigen::MatrixXd random_configuration(int vertices, int d, double scale,
                                     std::uint64_t seed) {
  Eigen::MatrixXd x(vertices, d);
  std::uint64_t state = seed;
  // Box-Muller keeps the stream identical across standard libraries.
  for (int i = 0; i < vertices; ++i)
    for (int k = 0; k < d; ++k) {
      const double u1 = unit_open(state);
      const double u2 = unit_open(state);
      x(i, k) = scale * std::sqrt(-2.0 * std::log(u1)) *
                std::cos(2.0 * std::numbers::pi * u2);
    }
  return x;
}

double stress_objective(const Graph& g, const Eigen::MatrixXd& x) {
  double total = 0.0;
  for (const auto& e : g.edges()) {
    const double f = (x.row(e.u) - x.row(e.v)).squaredNorm() - 1.0;
    total += f * f;
  }
  return total;
}

Eigen::MatrixXd stress_gradient(const Graph& g, const Eigen::MatrixXd& x) {
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  for (const auto& e : g.edges()) {
    const Eigen::RowVectorXd diff = x.row(e.u) - x.row(e.v);
    const double f = diff.squaredNorm() - 1.0;
    grad.row(e.u) += 4.0 * f * diff;
    grad.row(e.v) -= 4.0 * f * diff;
  }
  return grad;
}

namespace {

double max_length_residual(const Graph& g, const Eigen::MatrixXd& x) {
  double worst = 0.0;
  for (const auto& e : g.edges())
    worst = std::max(worst, std::abs((x.row(e.u) - x.row(e.v)).norm() - 1.0));
  return worst;
}

// Points closer than this after a descent are treated as collapsed.
constexpr double kSplitDistance = 1e-3;
constexpr double kPolishedResidual = 1e-11;
constexpr double kDegeneracyRatio = 1e3;
constexpr int kPolishIterations = 200;

double min_pairwise_distance(const Eigen::MatrixXd& x) {
  double best = std::numeric_limits<double>::infinity();
  for (int a = 0; a < x.rows(); ++a)
    for (int b = a + 1; b < x.rows(); ++b)
      best = std::min(best, (x.row(a) - x.row(b)).norm());
  return best;
}

// Levenberg-Marquardt on the edge residuals f_e = |x_u - x_v|^2 - 1.
// Stops when every |f_e| <= target, on a vanishing gradient, when damping
// blows up, when the objective fails to halve over 100 iterations, or at
// the iteration cap.
class LevenbergMarquardt {
 public:
  LevenbergMarquardt(const Graph& g, int d) : g_(g), n_(g.vertex_count()), d_(d) {}

  void run(Eigen::MatrixXd& x, int max_iterations, double target) const {
    const int dim = n_ * d_;
    Eigen::VectorXd f(g_.edge_count());
    Eigen::VectorXd f_new(g_.edge_count());
    residuals(x, f);
    double obj = f.squaredNorm();
    double lambda = 1e-3;
    double checkpoint = obj;
    Eigen::MatrixXd h(dim, dim);
    Eigen::VectorXd grad(dim);
    Eigen::MatrixXd trial(x.rows(), x.cols());

    for (int it = 0; it < max_iterations; ++it) {
      if (f.size() == 0 || f.cwiseAbs().maxCoeff() <= target) return;
      normal_equations(x, f, h, grad);
      if (2.0 * grad.norm() < 1e-12) return;
      bool improved = false;
      while (!improved) {
        Eigen::MatrixXd damped = h;
        damped.diagonal().array() += lambda;
        const Eigen::VectorXd step = damped.ldlt().solve(-grad);
        for (int i = 0; i < n_; ++i)
          for (int k = 0; k < d_; ++k) trial(i, k) = x(i, k) + step(i * d_ + k);
        residuals(trial, f_new);
        const double obj_new = f_new.squaredNorm();
        if (std::isfinite(obj_new) && obj_new < obj) {
          x = trial;
          f = f_new;
          obj = obj_new;
          lambda = std::max(lambda / 3.0, 1e-15);
          improved = true;
        } else {
          lambda *= 4.0;
          if (lambda > 1e12) return;
        }
      }
      if ((it + 1) % 100 == 0) {
        if (obj > 0.5 * checkpoint) return;
        checkpoint = obj;
      }
    }
  }

 private:
  void residuals(const Eigen::MatrixXd& x, Eigen::VectorXd& f) const {
    int k = 0;
    for (const auto& e : g_.edges())
      f(k++) = (x.row(e.u) - x.row(e.v)).squaredNorm() - 1.0;
  }

  // h = J^T J and grad = J^T f (half the objective gradient).
  void normal_equations(const Eigen::MatrixXd& x, const Eigen::VectorXd& f,
                        Eigen::MatrixXd& h, Eigen::VectorXd& grad) const {
    h.setZero();
    grad.setZero();
    int k = 0;
    for (const auto& e : g_.edges()) {
      const Eigen::VectorXd diff = (x.row(e.u) - x.row(e.v)).transpose();
      const Eigen::MatrixXd block = 4.0 * diff * diff.transpose();
      const int bu = e.u * d_;
      const int bv = e.v * d_;
      h.block(bu, bu, d_, d_) += block;
      h.block(bv, bv, d_, d_) += block;
      h.block(bu, bv, d_, d_) -= block;
      h.block(bv, bu, d_, d_) -= block;
      grad.segment(bu, d_) += 2.0 * f(k) * diff;
      grad.segment(bv, d_) -= 2.0 * f(k) * diff;
      ++k;
    }
  }

  const Graph& g_;
  int n_;
  int d_;
};

bool within_tolerance(const Graph& g, const Eigen::MatrixXd& x, double tol) {
  return max_length_residual(g, x) < tol && min_pairwise_distance(x) > kSeparationTolerance;
}

// Near-tangent configurations reach small residuals only by squeezing points
// together, with separation of order sqrt(residual). A genuine drawing
// polishes to near machine precision and stays well separated.
bool certifiable(const Graph& g, const Eigen::MatrixXd& x, double tol) {
  const double res = max_length_residual(g, x);
  const double sep = min_pairwise_distance(x);
  return res < tol && res <= kPolishedResidual && sep > kSeparationTolerance &&
         sep >= kDegeneracyRatio * std::sqrt(res);
}

// One restart: descend, then hop. A hop re-draws one endpoint of the worst
// edge or, once the residual is small but the drawing does not certify, the
// later vertex of every nearly coincident pair; the descent is repeated and
// the hop kept when it lowers the objective.
std::optional<Embedding> run_restart(const Graph& g, int d, const SearchConfig& cfg,
                                     int restart) {
  const int n = g.vertex_count();
  std::uint64_t state = restart_seed(cfg.seed, restart);
  auto gaussian = [&] {
    const double u1 = unit_open(state);
    const double u2 = unit_open(state);
    return cfg.init_scale * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  };
  Eigen::MatrixXd x(n, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) x(i, k) = gaussian();

  const LevenbergMarquardt lm(g, d);
  const double tol = cfg.residual_tolerance;
  lm.run(x, cfg.max_iterations, tol);
  double best = stress_objective(g, x);
  for (int hop = 0;; ++hop) {
    Eigen::MatrixXd y = x;
    const bool small = max_length_residual(g, x) < tol;
    if (small) {
      if (within_tolerance(g, x, tol)) {
        lm.run(y, kPolishIterations, 1e-13);
        if (certifiable(g, y, tol)) return Embedding{d, std::move(y)};
        y = x;
      }
    }
    if (hop >= cfg.hops) return std::nullopt;
    if (small) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if ((x.row(a) - x.row(b)).norm() < kSplitDistance)
            for (int k = 0; k < d; ++k) y(b, k) = gaussian();
    } else {
      Edge worst = g.edges().front();
      double worst_res = -1.0;
      for (const auto& e : g.edges()) {
        const double r = std::abs((x.row(e.u) - x.row(e.v)).norm() - 1.0);
        if (r > worst_res) {
          worst_res = r;
          worst = e;
        }
      }
      const Vertex pick = (splitmix64(state) & 1) ? worst.u : worst.v;
      for (int k = 0; k < d; ++k) y(pick, k) = gaussian();
    }
    lm.run(y, cfg.max_iterations, tol);
    const double obj = stress_objective(g, y);
    if (obj < best || max_length_residual(g, y) < tol) {
      x = std::move(y);
      best = obj;
    }
  }
}

int thread_budget(const SearchConfig& cfg) {
  int threads = cfg.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("DIMCRIT_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) threads = std::min(threads, cap);
    }
  }
  return std::max(1, threads);
}

}  // namespace

SearchOutcome find_embedding_detail(const Graph& g, int d, const SearchConfig& cfg) {
  cfg.validate();
  if (d < 0) throw DomainError("dimension must be non-negative");
  SearchOutcome out;
  const int n = g.vertex_count();
  if (n <= 1) {
    out.embedding = Embedding{d, Eigen::MatrixXd::Zero(n, d)};
    out.restart = 0;
    out.restarts_run = 0;
    return out;
  }
  if (d == 0) {
    out.restarts_run = cfg.restarts;
    return out;
  }
  const int threads = std::min(thread_budget(cfg), cfg.restarts);
  for (int wave = 0; wave < cfg.restarts; wave += threads) {
    const int count = std::min(threads, cfg.restarts - wave);
    std::vector<std::optional<Embedding>> results(count);
    if (count == 1) {
      results[0] = run_restart(g, d, cfg, wave);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < count; ++i)
        pool.emplace_back([&, i] { results[i] = run_restart(g, d, cfg, wave + i); });
      for (auto& t : pool) t.join();
    }
    for (int i = 0; i < count; ++i) {
      if (results[i]) {
        out.embedding = std::move(results[i]);
        out.restart = wave + i;
        out.restarts_run = wave + i + 1;
        return out;
      }
    }
    out.restarts_run = wave + count;
  }
  return out;
}

std::optional<Embedding> find_embedding(const Graph& g, int d, const SearchConfig& cfg) {
  return find_embedding_detail(g, d, cfg).embedding;
}

namespace {

int bit_count(std::uint32_t x) { return std::popcount(x); }

// Simple cycle whose length differs from 6 in the graph on the vertex mask.
bool has_cycle_not_six(const std::vector<std::uint32_t>& nbr, std::uint32_t mask) {
  bool found = false;
  std::function<void(int, int, std::uint32_t, int)> dfs =
      [&](int start, int cur, std::uint32_t visited, int len) {
        if (found) return;
        std::uint32_t next = nbr[cur] & mask;
        while (next && !found) {
          const int w = std::countr_zero(next);
          next &= next - 1;
          if (w == start && len >= 3 && len != 6) {
            found = true;
            return;
          }
          // Only visit vertices above the start to list each cycle once.
          if (w > start && !(visited & (1u << w)))
            dfs(start, w, visited | (1u << w), len + 1);
        }
      };
  std::uint32_t rest = mask;
  while (rest && !found) {
    const int s = std::countr_zero(rest);
    rest &= rest - 1;
    dfs(s, s, 1u << s, 1);
  }
  return found;
}

bool has_cycle(const std::vector<std::uint32_t>& nbr, std::uint32_t mask) {
  // A forest on k vertices with c components has k - c edges.
  int edges = 0;
  for (std::uint32_t r = mask; r; r &= r - 1) edges += bit_count(nbr[std::countr_zero(r)] & mask);
  edges /= 2;
  int components = 0;
  std::uint32_t unseen = mask;
  while (unseen) {
    std::uint32_t frontier = unseen & (~unseen + 1);
    std::uint32_t comp = 0;
    while (frontier) {
      comp |= frontier;
      std::uint32_t grow = 0;
      for (std::uint32_t r = frontier; r; r &= r - 1) grow |= nbr[std::countr_zero(r)];
      frontier = grow & mask & ~comp;
    }
    unseen &= ~comp;
    ++components;
  }
  return edges > bit_count(mask) - components;
}

// K_k + C_m inside G forces dim >= k + 2 when the cycle cannot lie on the
// circle of points at unit distance from a unit k-simplex in R^(k+1). That
// circle has squared radius (k+1)/(2k); for k >= 2 no cycle fits, for k = 1
// only C_6 does.
int join_subgraph_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kExhaustiveCliqueCutoff || n < 4) return 0;
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : g.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = (1u << n) - 1;
  int best = 0;
  for (std::uint32_t clique = 1; clique <= all; ++clique) {
    const int k = bit_count(clique);
    if (k + 2 <= best) continue;
    std::uint32_t common = all & ~clique;
    bool is_clique = true;
    for (std::uint32_t r = clique; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((((nbr[v] | (1u << v)) & clique) ^ clique) != 0) {
        is_clique = false;
        break;
      }
      common &= nbr[v];
    }
    if (!is_clique || bit_count(common) < 3) continue;
    const bool blocked = k >= 2 ? has_cycle(nbr, common) : has_cycle_not_six(nbr, common);
    if (blocked) best = k + 2;
  }
  return best;
}

std::string parts_label(const PartitionSpec& spec) {
  std::string s = "[";
  for (std::size_t i = 0; i < spec.parts().size(); ++i)
    s += (i ? "," : "") + std::to_string(spec.parts()[i]);
  return s + "]";
}

}  // namespace

LowerBound certified_lower_bound(const Graph& g) {
  LowerBound best = dimension_lower_bound_detail(g);
  if (auto sub = best_multipartite_subgraph(g); sub && sub->dimension > best.value)
    best = {sub->dimension, LowerProvenance::MultipartiteSubgraph};
  if (const int j = join_subgraph_bound(g); j > best.value)
    best = {j, LowerProvenance::JoinSubgraph};
  return best;
}

DimensionEstimate estimate_dimension(const Graph& g, const SearchConfig& cfg,
                                     EstimateOptions options) {
  cfg.validate();
  DimensionEstimate est;
  const int n = g.vertex_count();
  if (n <= 1) {
    est.embedding = Embedding{0, Eigen::MatrixXd::Zero(n, 0)};
    return est;
  }

  if (options.use_exact_families) {
    if (auto mp = recognize_multipartite(g)) {
      const int d = multipartite_dimension(mp->spec).value;
      est.lower = est.upper = d;
      est.lower_provenance = LowerProvenance::ExactFamily;
      est.upper_provenance = UpperProvenance::ExactFamily;
      est.family = "complete-multipartite " + parts_label(mp->spec);
      return est;
    }
    if (auto join = recognize_join(g); join && join->spec.clique_size >= 2) {
      const int d = join->spec.clique_size + 2;
      est.lower = est.upper = d;
      est.lower_provenance = LowerProvenance::ExactFamily;
      est.upper_provenance = UpperProvenance::ExactFamily;
      est.family = "join K_" + std::to_string(join->spec.clique_size) + " + C_" +
                   std::to_string(join->spec.cycle_length);
      const Embedding built = embed_join_clique_cycle(join->spec);
      Embedding emb{d, Eigen::MatrixXd(n, d)};
      const int k = join->spec.clique_size;
      for (int i = 0; i < k; ++i) emb.points.row(join->clique[i]) = built.points.row(i);
      for (int i = 0; i < join->spec.cycle_length; ++i)
        emb.points.row(join->cycle[i]) = built.points.row(k + i);
      if (verify_embedding(g, emb, kConstructionTolerance).passed) est.embedding = std::move(emb);
      return est;
    }
  }

  const LowerBound lower = certified_lower_bound(g);
  est.lower = lower.value;
  est.lower_provenance = lower.provenance;

  if (is_path_forest(g)) {
    est.upper = 1;
    est.upper_provenance = UpperProvenance::PathForest;
    est.embedding = embed_path_forest(g);
    return est;
  }

  const int trivial = dimension_upper_bound_trivial(g);
  for (int d = est.lower; d < trivial; ++d) {
    if (auto emb = find_embedding(g, d, cfg)) {
      est.upper = d;
      est.upper_provenance = UpperProvenance::EmbeddingFound;
      est.embedding = std::move(emb);
      return est;
    }
  }
  est.upper = trivial;
  est.upper_provenance = UpperProvenance::SimplexTrivial;
  est.embedding = regular_simplex(n);
  return est;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Critical: return "critical";
    case Verdict::NotCritical: return "not-critical";
    case Verdict::Undecided: return "undecided";
  }
  return "unknown";
}

Verdict edge_verdict(const DimensionEstimate& whole, const DimensionEstimate& minus) {
  if (minus.upper < whole.lower) return Verdict::Critical;
  // dim(G - e) <= dim(G) always, so this pins both to the same value.
  if (minus.lower >= whole.upper) return Verdict::NotCritical;
  return Verdict::Undecided;
}

namespace {

struct OrbitRep {
  Edge edge;
  long long size;
};

std::vector<OrbitRep> edge_orbit_representatives(const Graph& g) {
  std::vector<int> key(g.edge_count());
  if (auto mp = recognize_multipartite(g)) {
    const auto& sizes = mp->spec.parts();
    for (int i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edges()[i];
      const int a = sizes[mp->part_of[e.u]];
      const int b = sizes[mp->part_of[e.v]];
      key[i] = std::max(a, b) * 1024 + std::min(a, b);
    }
  } else if (auto join = recognize_join(g); join) {
    std::vector<bool> in_clique(g.vertex_count(), false);
    for (Vertex v : join->clique) in_clique[v] = true;
    for (int i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edges()[i];
      key[i] = static_cast<int>(in_clique[e.u]) + static_cast<int>(in_clique[e.v]);
    }
  } else {
    for (int i = 0; i < g.edge_count(); ++i) key[i] = i;
  }
  std::vector<OrbitRep> reps;
  std::map<int, std::size_t> index;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [it, inserted] = index.emplace(key[i], reps.size());
    if (inserted)
      reps.push_back({g.edges()[i], 1});
    else
      ++reps[it->second].size;
  }
  return reps;
}

}  // namespace

CriticalityReport test_criticality(const Graph& g, const SearchConfig& cfg) {
  if (g.edge_count() == 0) throw DomainError("criticality needs at least one edge");
  if (!is_connected(g)) throw DomainError("criticality needs a connected graph");
  CriticalityReport report;
  report.graph_estimate = estimate_dimension(g, cfg);
  bool any_not = false;
  bool all_critical = true;
  for (const auto& rep : edge_orbit_representatives(g)) {
    EdgeOutcome out;
    out.edge = rep.edge;
    out.orbit_size = rep.size;
    out.estimate = estimate_dimension(delete_edge(g, rep.edge), cfg);
    out.verdict = edge_verdict(report.graph_estimate, out.estimate);
    any_not = any_not || out.verdict == Verdict::NotCritical;
    all_critical = all_critical && out.verdict == Verdict::Critical;
    report.edges.push_back(std::move(out));
  }
  report.overall = any_not ? Verdict::NotCritical
                           : (all_critical ? Verdict::Critical : Verdict::Undecided);
  return report;
}

PruneResult prune_to_critical(const Graph& g, int target_dim, const SearchConfig& cfg) {
  const DimensionEstimate start = estimate_dimension(g, cfg);
  if (!start.exact() || start.lower != target_dim)
    throw DomainError("prune needs a certified dimension equal to the target (have [" +
                      std::to_string(start.lower) + "," + std::to_string(start.upper) + "])");
  PruneResult result;
  result.graph = g;
  for (;;) {
    bool deleted = false;
    std::vector<PruneStep> pass;
    for (const auto& e : result.graph.edges()) {
      PruneStep step;
      step.edge = e;
      step.estimate = estimate_dimension(delete_edge(result.graph, e), cfg);
      if (step.estimate.lower >= target_dim) {
        step.verdict = Verdict::NotCritical;
        step.deleted = true;
        result.graph = delete_edge(result.graph, e);
        result.deletions.push_back(std::move(step));
        deleted = true;
        break;
      }
      step.verdict = step.estimate.upper < target_dim ? Verdict::Critical : Verdict::Undecided;
      pass.push_back(std::move(step));
    }
    if (!deleted) {
      result.remaining = std::move(pass);
      break;
    }
  }
  result.undecided = static_cast<int>(std::count_if(
      result.remaining.begin(), result.remaining.end(),
      [](const PruneStep& s) { return s.verdict == Verdict::Undecided; }));
  return result;
}

std::vector<DeletionRow> resolve_deletion_table(const PartitionSpec& spec,
                                                const SearchConfig& cfg) {
  auto rows = multipartite_deletion_table(spec);
  if (spec.vertex_count() > kMultipartiteSubgraphCutoff) return rows;
  const Graph g = build_multipartite(spec);
  for (auto& row : rows) {
    if (row.exact()) continue;
    const auto est = estimate_dimension(delete_edge(g, row.orbit.representative), cfg);
    if (est.lower > row.lower) {
      row.lower = est.lower;
      row.lower_basis = "numerical estimate: " + to_string(est.lower_provenance);
    }
    if (est.upper < row.upper) {
      row.upper = est.upper;
      row.upper_basis = "numerical estimate: " + to_string(est.upper_provenance);
    }
  }
  return rows;
}

}  // namespace dimcrit
