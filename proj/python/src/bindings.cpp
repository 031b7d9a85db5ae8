// Thin JSON-text bridge; the Python package converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dimcrit/cli.hpp"
#include "dimcrit/embed_search.hpp"
#include "dimcrit/hunt.hpp"
#include "dimcrit/json_io.hpp"
#include "dimcrit/multipartite.hpp"
#include "dimcrit/reproduce.hpp"

namespace py = pybind11;
using namespace dimcrit;

namespace {

SearchConfig make_config(std::uint64_t seed, int restarts, double tol) {
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  cfg.residual_tolerance = tol;
  cfg.validate();
  return cfg;
}

Json parse(const std::string& text) { return parse_json_text(text); }

std::string dump(const Json& j) { return dump_json(j); }

}  // namespace

PYBIND11_MODULE(_dimcrit, m) {
  m.doc() = "Unit-distance dimension of graphs";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  const SearchConfig defaults;

  m.def("dim_formula", [](const std::string& spec) {
    const auto d = multipartite_dimension(partition_from_json(parse(spec)));
    return d.value;
  });
  m.def("critical_formula", [](const std::string& spec) {
    return dump(to_json(classify_multipartite_criticality(partition_from_json(parse(spec)))));
  });
  m.def("deletion_table", [](const std::string& spec) {
    Json rows = Json::array();
    for (const auto& r : multipartite_deletion_table(partition_from_json(parse(spec))))
      rows.push_back(to_json(r));
    return dump(rows);
  });
  m.def("build_multipartite", [](const std::string& spec) {
    return dump(to_json(build_multipartite(partition_from_json(parse(spec)))));
  });
  m.def(
      "verify",
      [](const std::string& graph, const std::string& embedding, double tol) {
        return dump(to_json(
            verify_embedding(graph_from_json(parse(graph)), embedding_from_json(parse(embedding)), tol)));
      },
      py::arg("graph"), py::arg("embedding"), py::arg("tol") = 1e-9);
  m.def(
      "estimate",
      [](const std::string& graph, std::uint64_t seed, int restarts, double tol, bool families) {
        const Graph g = graph_from_json(parse(graph));
        const auto cfg = make_config(seed, restarts, tol);
        py::gil_scoped_release release;
        return dump(to_json(estimate_dimension(g, cfg, {.use_exact_families = families})));
      },
      py::arg("graph"), py::arg("seed") = 0, py::arg("restarts") = defaults.restarts,
      py::arg("tol") = defaults.residual_tolerance, py::arg("families") = true);
  m.def(
      "critical_test",
      [](const std::string& graph, std::uint64_t seed, int restarts, double tol) {
        const Graph g = graph_from_json(parse(graph));
        const auto cfg = make_config(seed, restarts, tol);
        py::gil_scoped_release release;
        return dump(to_json(test_criticality(g, cfg)));
      },
      py::arg("graph"), py::arg("seed") = 0, py::arg("restarts") = defaults.restarts,
      py::arg("tol") = defaults.residual_tolerance);
  m.def(
      "prune",
      [](const std::string& graph, int target, std::uint64_t seed, int restarts, double tol) {
        const Graph g = graph_from_json(parse(graph));
        const auto cfg = make_config(seed, restarts, tol);
        py::gil_scoped_release release;
        return dump(to_json(prune_to_critical(g, target, cfg)));
      },
      py::arg("graph"), py::arg("target"), py::arg("seed") = 0,
      py::arg("restarts") = defaults.restarts, py::arg("tol") = defaults.residual_tolerance);
  m.def(
      "hunt",
      [](const std::string& kind, int max_vertices, std::uint64_t seed) {
        const auto cfg = make_config(seed, SearchConfig{}.restarts, SearchConfig{}.residual_tolerance);
        if (kind != "edge" && kind != "vertex") throw DomainError("hunt kind must be edge or vertex");
        py::gil_scoped_release release;
        return dump(to_json(kind == "edge" ? hunt_edge_drop(max_vertices, cfg)
                                           : hunt_vertex_drop(max_vertices, cfg)));
      },
      py::arg("kind"), py::arg("max_vertices") = 5, py::arg("seed") = 0);
  m.def("cycle_circle", [](const std::string& r_squared, long long length) {
    return dump(to_json(cycle_on_circle_feasible(parse_rational(r_squared), length)));
  });
  m.def("arcsin", [](const std::string& r) {
    return dump(to_json(rational_arcsin_sqrt(parse_rational(r))));
  });
  m.def(
      "reproduce",
      [](const std::string& check, std::uint64_t seed) {
        const auto cfg = make_config(seed, SearchConfig{}.restarts, SearchConfig{}.residual_tolerance);
        py::gil_scoped_release release;
        return dump(run_reproduce(check, cfg));
      },
      py::arg("check") = "all", py::arg("seed") = 0);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
