#include "dimcrit/reproduce.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace dimcrit {

namespace {

void add_partitions(int remaining, int largest, std::vector<int>& current,
                    std::vector<PartitionSpec>& out) {
  if (remaining == 0) {
    if (current.size() >= 2) out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, largest); p >= 1; --p) {
    current.push_back(p);
    add_partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

CheckResult formula_fidelity(const SearchConfig&) {
  struct Case {
    std::vector<int> parts;
    int expected;
  };
  std::vector<Case> cases = {{{3, 2}, 3}, {{2, 2}, 2}, {{3, 1}, 2}};
  for (int a = 2; a <= 8; ++a) cases.push_back({std::vector<int>(a, 1), a - 1});
  CheckResult r{"formula-fidelity", true, Json::array()};
  for (const auto& c : cases) {
    const int got = multipartite_dimension(PartitionSpec(c.parts)).value;
    r.passed = r.passed && got == c.expected;
    r.details.push_back({{"parts", c.parts}, {"expected", c.expected}, {"dimension", got}});
  }
  return r;
}

CheckResult formula_vs_search(const SearchConfig& cfg) {
  CheckResult r{"formula-vs-search", true, Json::array()};
  for (const auto& spec : small_partitions(7)) {
    const Graph g = build_multipartite(spec);
    const int formula = multipartite_dimension(spec).value;
    const auto est = estimate_dimension(g, cfg, {.use_exact_families = false});
    const bool below = formula >= 1 && find_embedding(g, formula - 1, cfg).has_value();
    const bool backed = est.embedding && est.embedding->dimension == formula &&
                        verify_embedding(g, *est.embedding).passed;
    const bool ok = est.exact() && est.upper == formula && backed && !below;
    r.passed = r.passed && ok;
    r.details.push_back({{"parts", spec.parts()},
                         {"formula", formula},
                         {"estimate", to_json(est, false)},
                         {"found_below_formula", below},
                         {"passed", ok}});
  }
  return r;
}

CheckResult classifier(const SearchConfig& cfg) {
  CheckResult r{"classifier", true, Json::array()};
  for (const auto& spec : small_partitions(7)) {
    const auto verdict = classify_multipartite_criticality(spec);
    const auto report = test_criticality(build_multipartite(spec), cfg);
    const Verdict expected = verdict.is_critical ? Verdict::Critical : Verdict::NotCritical;
    const bool ok = report.overall == expected;
    r.passed = r.passed && ok;
    r.details.push_back({{"parts", spec.parts()},
                         {"rule", to_string(verdict.rule)},
                         {"classifier", verdict.is_critical ? "critical" : "not-critical"},
                         {"search", to_string(report.overall)},
                         {"passed", ok}});
  }
  return r;
}

CheckResult join_dimension(const SearchConfig&) {
  CheckResult r{"join-dimension", true, Json::array()};
  for (int n = 2; n <= 4; ++n) {
    for (int m = 3; m <= 10; ++m) {
      const JoinSpec spec{n, m};
      const Graph g = build_join_clique_cycle(spec);
      const Embedding full = embed_join_clique_cycle(spec);
      const auto full_report = verify_embedding(g, full, kConstructionTolerance);
      const Embedding minus = embed_join_minus_edge(spec);
      const auto minus_report =
          verify_embedding(delete_edge(g, join_closing_edge(spec)), minus, kConstructionTolerance);
      const bool ok = full_report.passed && full.dimension == n + 2 && minus_report.passed &&
                      minus.dimension == n + 1;
      r.passed = r.passed && ok;
      r.details.push_back({{"n", n},
                           {"m", m},
                           {"join_dimension", full.dimension},
                           {"join_residual", full_report.max_edge_residual},
                           {"minus_edge_dimension", minus.dimension},
                           {"minus_edge_residual", minus_report.max_edge_residual},
                           {"minus_edge_separation", minus_report.min_separation},
                           {"passed", ok}});
    }
  }
  return r;
}

CheckResult circle_obstruction(const SearchConfig&) {
  CheckResult r{"circle-obstruction", true, Json::object()};
  long long checked = 0;
  long long feasible = 0;
  Json first_failure = nullptr;
  for (long long n = 2; n <= 1000; ++n) {
    const Rational r2(n + 1, 2 * n);
    for (long long m = 3; m <= 1000; ++m) {
      ++checked;
      if (cycle_on_circle_feasible(r2, m).feasible) {
        ++feasible;
        if (first_failure.is_null()) first_failure = {{"n", n}, {"m", m}};
      }
    }
  }
  const auto hexagon = cycle_on_circle_feasible(Rational(1), 6);
  const auto triangle = cycle_on_circle_feasible(Rational(1, 3), 3);
  r.passed = feasible == 0 && hexagon.feasible && triangle.feasible;
  r.details = {{"pairs_checked", checked},
               {"feasible_pairs", feasible},
               {"first_feasible", first_failure},
               {"control_r2_1_m_6", to_json(hexagon)},
               {"control_r2_1/3_m_3", to_json(triangle)}};
  return r;
}

CheckResult arcsin_table(const SearchConfig&) {
  CheckResult r{"arcsin-table", true, Json::object()};
  const std::map<Rational, Rational> table = {{Rational(0), Rational(0)},
                                              {Rational(1, 4), Rational(1, 6)},
                                              {Rational(1, 2), Rational(1, 4)},
                                              {Rational(3, 4), Rational(1, 3)},
                                              {Rational(1), Rational(1, 2)}};
  Json rows = Json::array();
  for (const auto& [input, expected] : table) {
    const auto got = rational_arcsin_sqrt(input);
    const bool ok = got.multiple_of_pi && *got.multiple_of_pi == expected;
    r.passed = r.passed && ok;
    rows.push_back({{"r", to_string(input)}, {"angle", to_json(got)}, {"passed", ok}});
  }
  int others = 0;
  int irrational = 0;
  for (long long q = 2; others < 200; ++q) {
    for (long long p = 1; p < q && others < 200; ++p) {
      if (std::gcd(p, q) != 1 || table.count(Rational(p, q))) continue;
      ++others;
      if (!rational_arcsin_sqrt(Rational(p, q)).is_rational()) ++irrational;
    }
  }
  r.passed = r.passed && irrational == others;
  r.details = {{"table", std::move(rows)}, {"others_checked", others},
               {"others_irrational", irrational}};
  return r;
}

CheckResult vertex_drop_witness(const SearchConfig& cfg) {
  CheckResult r{"vertex-drop-witness", true, Json::object()};
  const Graph join = build_join_clique_cycle({2, 6});
  const Graph wheel = build_wheel(6);
  const auto before = estimate_dimension(join, cfg);
  const auto after = estimate_dimension(wheel, cfg);
  const bool iso = isomorphic_bruteforce(delete_vertex(join, 0), wheel);
  const bool join_backed = before.embedding &&
                           verify_embedding(join, *before.embedding, kConstructionTolerance).passed;
  const bool wheel_backed = after.embedding && verify_embedding(wheel, *after.embedding).passed;
  const int drop = before.lower - after.upper;
  r.passed = before.exact() && before.upper == 4 && join_backed && after.exact() &&
             after.upper == 2 && after.upper_provenance == UpperProvenance::EmbeddingFound &&
             wheel_backed && iso && drop == 2;
  r.details = {{"join", to_json(before, false)},
               {"wheel", to_json(after, false)},
               {"deletion_is_wheel", iso},
               {"certified_drop", drop}};
  return r;
}

CheckResult edge_drop_sweep(const SearchConfig& cfg) {
  const auto report = hunt_edge_drop(5, cfg);
  CheckResult r{"edge-drop-sweep", report.certified.empty(), Json::object()};
  Json undecided = Json::array();
  for (const auto& c : report.undecided) undecided.push_back(to_json(c));
  r.details = {{"max_vertices", 5},
               {"graphs_examined", report.graphs_examined},
               {"deletions_examined", report.deletions_examined},
               {"max_certified_drop", report.max_certified_drop},
               {"certified_drops_at_least_2", report.certified.size()},
               {"undecided_count", report.undecided.size()},
               {"undecided", std::move(undecided)}};
  return r;
}

CheckResult determinism(const SearchConfig& cfg) {
  CheckResult r{"determinism", true, Json::array()};
  const std::vector<std::pair<std::string, Graph>> probes = {
      {"wheel-6", build_wheel(6)},
      {"k33", build_multipartite(PartitionSpec({3, 3}))},
      {"heptagon-with-chords", Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6},
                                    {0, 3}, {1, 5}, {2, 6}})}};
  for (const auto& [name, g] : probes) {
    const auto a = estimate_dimension(g, cfg, {.use_exact_families = false});
    const auto b = estimate_dimension(g, cfg, {.use_exact_families = false});
    const bool same = dump_json(to_json(a)) == dump_json(to_json(b));
    r.passed = r.passed && same;
    r.details.push_back({{"graph", name}, {"upper", a.upper}, {"identical", same}});
  }
  return r;
}

using CheckFn = std::function<CheckResult(const SearchConfig&)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks = {
      {"formula-fidelity", formula_fidelity},
      {"formula-vs-search", formula_vs_search},
      {"classifier", classifier},
      {"join-dimension", join_dimension},
      {"circle-obstruction", circle_obstruction},
      {"arcsin-table", arcsin_table},
      {"vertex-drop-witness", vertex_drop_witness},
      {"edge-drop-sweep", edge_drop_sweep},
      {"determinism", determinism},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& reproduce_check_ids() {
  static const std::vector<std::string> ids = {
      "formula-fidelity",   "formula-vs-search", "classifier",
      "join-dimension",     "circle-obstruction", "arcsin-table",
      "vertex-drop-witness", "edge-drop-sweep",  "determinism"};
  return ids;
}

std::vector<PartitionSpec> small_partitions(int max_vertices) {
  std::vector<PartitionSpec> out;
  std::vector<int> current;
  for (int v = 2; v <= max_vertices; ++v) add_partitions(v, v, current, out);
  return out;
}

CheckResult run_check(const std::string& id, const SearchConfig& cfg) {
  auto it = registry().find(id);
  if (it == registry().end()) throw DomainError("unknown check \"" + id + "\"");
  return it->second(cfg);
}

Json run_reproduce(const std::string& id, const SearchConfig& cfg) {
  std::vector<std::string> ids;
  if (id == "all")
    ids = reproduce_check_ids();
  else
    ids = {id};
  Json checks = Json::array();
  bool passed = true;
  for (const auto& name : ids) {
    const CheckResult c = run_check(name, cfg);
    passed = passed && c.passed;
    checks.push_back({{"id", c.id}, {"passed", c.passed}, {"details", c.details}});
  }
  return {{"seed", cfg.seed}, {"checks", std::move(checks)}, {"passed", passed}};
}

}  // namespace dimcrit
