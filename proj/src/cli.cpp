#include "dimcrit/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dimcrit/embed_search.hpp"
#include "dimcrit/hunt.hpp"
#include "dimcrit/json_io.hpp"
#include "dimcrit/multipartite.hpp"
#include "dimcrit/reproduce.hpp"

namespace dimcrit {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inline JSON if it starts with '{' or '[', "-" for stdin, else a file path.
Json load_json(const std::string& source) {
  const auto start = source.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw ParseError("empty input");
  if (source[start] == '{' || source[start] == '[') return parse_json_text(source);
  std::stringstream buf;
  if (source == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw IoError("cannot read " + source);
    buf << in.rdbuf();
  }
  return parse_json_text(buf.str());
}

Rational cli_rational(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("expected a comma-separated integer list, got \"" + text + "\"");
    }
  }
  return values;
}

struct SearchFlags {
  SearchConfig cfg;
  CLI::Option* seed = nullptr;
};

void add_search_flags(CLI::App* sub, SearchFlags& flags) {
  flags.seed = sub->add_option("--seed", flags.cfg.seed, "Master seed");
  sub->add_option("--restarts", flags.cfg.restarts, "Random restarts per dimension");
  sub->add_option("--tol", flags.cfg.residual_tolerance, "Edge residual tolerance");
}

Json error_payload(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

std::string require_string(const std::string& value, const char* flag) {
  if (value.empty()) throw DomainError(std::string(flag) + " is required for this family");
  return value;
}

int require_int(int value, const char* flag) {
  if (value < 0) throw DomainError(std::string(flag) + " is required for this family");
  return value;
}

Graph build_family(const std::string& family, int n, int m, const std::string& parts) {
  if (family == "complete") return build_complete(require_int(n, "--n"));
  if (family == "cycle") return build_cycle(require_int(m, "--m"));
  if (family == "path") return build_path(require_int(n, "--n"));
  if (family == "wheel") return build_wheel(require_int(m, "--m"));
  if (family == "multipartite")
    return build_multipartite(PartitionSpec(int_list(require_string(parts, "--parts"))));
  if (family == "join")
    return build_join_clique_cycle({require_int(n, "--n"), require_int(m, "--m")});
  throw DomainError("unknown graph family \"" + family + "\"");
}

Embedding build_embedding(const std::string& family, int n, int m, double r) {
  if (family == "simplex") return regular_simplex(require_int(n, "--n"));
  if (family == "join")
    return embed_join_clique_cycle({require_int(n, "--n"), require_int(m, "--m")});
  if (family == "join-minus-edge")
    return embed_join_minus_edge({require_int(n, "--n"), require_int(m, "--m")});
  if (family == "cycle-sphere") {
    if (!(r > 0)) throw DomainError("--r is required for cycle-sphere");
    return embed_cycle_on_sphere(require_int(m, "--m"), r);
  }
  throw DomainError("unknown embedding family \"" + family + "\"");
}

}  // namespace

std::string emit_plot_data(const Embedding& emb, const Graph& g, int axis_x, int axis_y) {
  if (axis_x < 0 || axis_y < 0 || axis_x >= emb.dimension || axis_y >= emb.dimension)
    throw DomainError("projection axes must lie in [0, " + std::to_string(emb.dimension) + ")");
  if (g.vertex_count() != 0 && g.vertex_count() != emb.vertex_count())
    throw DomainError("graph and embedding have different vertex counts");
  std::string out = "# points " + std::to_string(emb.vertex_count()) + "\n";
  char buf[96];
  for (int i = 0; i < emb.vertex_count(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", emb.points(i, axis_x), emb.points(i, axis_y));
    out += buf;
  }
  out += "# edges " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit-distance dimension and dimension-criticality of small graphs", "dimcrit"};
  app.require_subcommand(1, 1);

  std::string output;
  std::string input;
  std::string second_input;
  std::string family;
  std::string parts;
  std::string r2_text;
  std::string axes = "0,1";
  std::string check = "all";
  int n = -1;
  int m = -1;
  double radius = 0.0;
  long long cycle_m = 0;
  int target = -1;
  int max_vertices = 5;
  double verify_tol = kVerifyTolerance;
  double separation = kSeparationTolerance;
  bool resolve = false;
  bool no_families = false;
  SearchFlags flags;

  auto with_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", output, "Write the result to this file");
    return sub;
  };

  auto* dim_formula = with_output(app.add_subcommand("dim-formula", "Dimension of a complete multipartite graph"));
  dim_formula->add_option("spec", input, "PartitionSpec JSON (inline, path or -)")->required();

  auto* crit_formula = with_output(app.add_subcommand("critical-formula", "Criticality of a complete multipartite graph"));
  crit_formula->add_option("spec", input, "PartitionSpec JSON")->required();

  auto* table = with_output(app.add_subcommand("deletion-table", "Dimension after deleting one edge per orbit"));
  table->add_option("spec", input, "PartitionSpec JSON")->required();
  table->add_flag("--resolve", resolve, "Close open rows numerically");
  add_search_flags(table, flags);

  auto* embed = with_output(app.add_subcommand("embed", "Construct a unit-distance embedding"));
  embed->add_option("--family", family, "simplex, join, join-minus-edge or cycle-sphere")->required();
  embed->add_option("--n", n, "Clique or simplex size");
  embed->add_option("--m", m, "Cycle length");
  embed->add_option("--r", radius, "Sphere radius for cycle-sphere");

  auto* verify = with_output(app.add_subcommand("verify", "Check an embedding against a graph"));
  verify->add_option("graph", input, "Graph JSON")->required();
  verify->add_option("embedding", second_input, "Embedding JSON")->required();
  verify->add_option("--tol", verify_tol, "Edge residual tolerance");
  verify->add_option("--separation", separation, "Minimum point separation");

  auto* estimate = with_output(app.add_subcommand("estimate", "Certified dimension bounds"));
  estimate->add_option("graph", input, "Graph JSON")->required();
  estimate->add_flag("--no-families", no_families, "Skip exact-family recognition");
  add_search_flags(estimate, flags);

  auto* critical = with_output(app.add_subcommand("critical-test", "Edge-by-edge criticality"));
  critical->add_option("graph", input, "Graph JSON")->required();
  add_search_flags(critical, flags);

  auto* prune = with_output(app.add_subcommand("prune", "Delete non-critical edges"));
  prune->add_option("graph", input, "Graph JSON")->required();
  prune->add_option("--target", target, "Certified dimension of the graph")->required();
  add_search_flags(prune, flags);

  auto* hunt_edge = with_output(app.add_subcommand("hunt-edge", "Search for edge deletions dropping dim by 2"));
  hunt_edge->add_option("--max-vertices", max_vertices, "Largest graph order (at most 7)");
  add_search_flags(hunt_edge, flags);

  auto* hunt_vertex = with_output(app.add_subcommand("hunt-vertex", "Search for vertex deletions dropping dim by 2"));
  hunt_vertex->add_option("--max-vertices", max_vertices, "Largest graph order (at most 7)");
  add_search_flags(hunt_vertex, flags);

  auto* cycle = with_output(app.add_subcommand("cycle-circle", "Can C_m sit on a circle of squared radius r2"));
  cycle->add_option("--r2", r2_text, "Squared radius as p/q")->required();
  cycle->add_option("--m", cycle_m, "Cycle length")->required();

  auto* arcsin = with_output(app.add_subcommand("arcsin", "(1/pi) arcsin(sqrt(r)) when rational"));
  arcsin->add_option("--r", r2_text, "r as p/q")->required();

  auto* reproduce = with_output(app.add_subcommand("reproduce", "Run a named check or all"));
  reproduce->add_option("check", check, "Check id or all");
  add_search_flags(reproduce, flags);
  flags.seed->required();

  auto* graph = with_output(app.add_subcommand("graph", "Build a graph family"));
  graph->add_option("--family", family, "complete, cycle, path, wheel, multipartite or join")->required();
  graph->add_option("--n", n, "Vertex or clique count");
  graph->add_option("--m", m, "Cycle length");
  graph->add_option("--parts", parts, "Part sizes, comma separated");

  auto* plot = with_output(app.add_subcommand("plot-data", "Two-axis projection as columnar text"));
  plot->add_option("embedding", input, "Embedding JSON")->required();
  plot->add_option("--graph", second_input, "Graph JSON for the edge list");
  plot->add_option("--axes", axes, "Two coordinate indices, e.g. 0,1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out, err);
    }

    std::string text;
    auto emit = [&](const Json& j) { text = dump_json(j); };
    int status = kExitOk;
    const SearchConfig& cfg = flags.cfg;

    if (dim_formula->parsed()) {
      const auto d = multipartite_dimension(partition_from_json(load_json(input)));
      emit({{"dimension", d.value},
            {"basis", d.basis == DimensionBasis::Formula ? "formula" : "edgeless-convention"}});
    } else if (crit_formula->parsed()) {
      const auto spec = partition_from_json(load_json(input));
      Json j = to_json(classify_multipartite_criticality(spec));
      j["dimension"] = multipartite_dimension(spec).value;
      emit(j);
    } else if (table->parsed()) {
      const auto spec = partition_from_json(load_json(input));
      const auto rows = resolve ? resolve_deletion_table(spec, cfg) : multipartite_deletion_table(spec);
      Json list = Json::array();
      for (const auto& row : rows) list.push_back(to_json(row));
      emit({{"parts", spec.parts()},
            {"dimension", multipartite_dimension(spec).value},
            {"rows", std::move(list)}});
    } else if (embed->parsed()) {
      emit(to_json(build_embedding(family, n, m, radius)));
    } else if (verify->parsed()) {
      const Graph g = graph_from_json(load_json(input));
      const Embedding emb = embedding_from_json(load_json(second_input));
      emit(to_json(verify_embedding(g, emb, verify_tol, separation)));
    } else if (estimate->parsed()) {
      const Graph g = graph_from_json(load_json(input));
      emit(to_json(estimate_dimension(g, cfg, {.use_exact_families = !no_families})));
    } else if (critical->parsed()) {
      emit(to_json(test_criticality(graph_from_json(load_json(input)), cfg)));
    } else if (prune->parsed()) {
      emit(to_json(prune_to_critical(graph_from_json(load_json(input)), target, cfg)));
    } else if (hunt_edge->parsed()) {
      emit(to_json(hunt_edge_drop(max_vertices, cfg)));
    } else if (hunt_vertex->parsed()) {
      emit(to_json(hunt_vertex_drop(max_vertices, cfg)));
    } else if (cycle->parsed()) {
      emit(to_json(cycle_on_circle_feasible(cli_rational(r2_text), cycle_m)));
    } else if (arcsin->parsed()) {
      const Rational r = cli_rational(r2_text);
      Json j = to_json(rational_arcsin_sqrt(r));
      j["r"] = to_string(r);
      emit(j);
    } else if (reproduce->parsed()) {
      const Json result = run_reproduce(check, cfg);
      if (!result["passed"].get<bool>()) status = kExitDomain;
      emit(result);
    } else if (graph->parsed()) {
      emit(to_json(build_family(family, n, m, parts)));
    } else if (plot->parsed()) {
      const auto ax = int_list(axes);
      if (ax.size() != 2) throw ParseError("--axes needs exactly two indices");
      const Embedding emb = embedding_from_json(load_json(input));
      const Graph g = second_input.empty() ? Graph(0) : graph_from_json(load_json(second_input));
      text = emit_plot_data(emb, g, ax[0], ax[1]);
    }

    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << text)) throw IoError("cannot write " + output);
    }
    return status;
  } catch (const CLI::ParseError& e) {
    err << dump_json(error_payload("usage-error", e.what()));
    return kExitIo;
  } catch (const ParseError& e) {
    err << dump_json(error_payload("parse-error", e.what()));
    return kExitIo;
  } catch (const IoError& e) {
    err << dump_json(error_payload("io-error", e.what()));
    return kExitIo;
  } catch (const DomainError& e) {
    err << dump_json(error_payload("domain-error", e.what()));
    return kExitDomain;
  } catch (const std::exception& e) {
    err << dump_json(error_payload("domain-error", e.what()));
    return kExitDomain;
  }
}

}  // namespace dimcrit
