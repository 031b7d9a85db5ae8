#include "dimcrit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace dimcrit {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void write_float(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
  // Keep the value a float when read back.
  if (std::string_view(buf).find_first_of(".eE") == std::string_view::npos) out += ".0";
}

void write(std::string& out, const Json& j, int indent) {
  const std::string pad(indent * 2, ' ');
  const std::string inner((indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      write_float(out, j.get<double>());
      return;
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        write(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& x : j) flat = flat && is_scalar(x);
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write(out, j[i], indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        write(out, j[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

long long as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

double as_number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

Json parts_json(const PartitionSpec& spec) { return spec.parts(); }

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) {
  std::string out;
  write(out, j, 0);
  out += "\n";
  return out;
}

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(to_json(e));
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const long long n = as_integer(field(j, "n"), "n");
  if (n < 0 || n > std::numeric_limits<int>::max()) throw DomainError("n out of range");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]");
    const long long a = as_integer(e[0], "edge endpoint");
    const long long b = as_integer(e[1], "edge endpoint");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw DomainError("edge endpoint out of range");
    if (a == b) throw DomainError("self-loop");
    list.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  return Graph(static_cast<int>(n), std::move(list));
}

Json to_json(const PartitionSpec& spec) { return {{"parts", parts_json(spec)}}; }

PartitionSpec partition_from_json(const Json& j) {
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) throw ParseError("parts must be an array");
  std::vector<int> sizes;
  for (const auto& p : parts) {
    const long long s = as_integer(p, "part size");
    if (s < 1 || s > 1'000'000) throw DomainError("part sizes must be positive");
    sizes.push_back(static_cast<int>(s));
  }
  return PartitionSpec(std::move(sizes));
}

Json to_json(const Embedding& emb) {
  Json points = Json::array();
  for (Eigen::Index i = 0; i < emb.points.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < emb.points.cols(); ++k) row.push_back(emb.points(i, k));
    points.push_back(std::move(row));
  }
  return {{"d", emb.dimension}, {"points", std::move(points)}};
}

Embedding embedding_from_json(const Json& j) {
  const long long d = as_integer(field(j, "d"), "d");
  if (d < 0 || d > 100'000) throw DomainError("d out of range");
  const Json& points = field(j, "points");
  if (!points.is_array()) throw ParseError("points must be an array");
  Embedding emb{static_cast<int>(d),
                Eigen::MatrixXd(static_cast<Eigen::Index>(points.size()), d)};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& row = points[i];
    if (!row.is_array()) throw ParseError("each point must be an array");
    if (static_cast<long long>(row.size()) != d)
      throw DomainError("point " + std::to_string(i) + " has " + std::to_string(row.size()) +
                        " coordinates, expected " + std::to_string(d));
    for (long long k = 0; k < d; ++k)
      emb.points(static_cast<Eigen::Index>(i), k) = as_number(row[k], "coordinate");
  }
  return emb;
}

Json to_json(const VerificationReport& r) {
  return {{"max_edge_residual", r.max_edge_residual},
          {"min_separation", r.min_separation},
          {"tolerance", r.tolerance},
          {"separation_tolerance", r.separation_tolerance},
          {"passed", r.passed}};
}

Json to_json(const DimensionEstimate& est, bool with_embedding) {
  Json j = {{"lower", est.lower},
            {"lower_provenance", to_string(est.lower_provenance)},
            {"upper", est.upper},
            {"upper_provenance", to_string(est.upper_provenance)},
            {"status", est.exact() ? "exact" : "interval"}};
  if (!est.family.empty()) j["family"] = est.family;
  if (with_embedding && est.embedding) j["embedding"] = to_json(*est.embedding);
  return j;
}

Json to_json(const DimensionEstimate& est) { return to_json(est, true); }

Json to_json(const CriticalityVerdict& v) {
  return {{"is_critical", v.is_critical}, {"rule", to_string(v.rule)}, {"witness", v.witness}};
}

Json to_json(const DeletionRow& row) {
  return {{"orbit", {{"larger_part", row.orbit.larger_part},
                     {"smaller_part", row.orbit.smaller_part},
                     {"representative", to_json(row.orbit.representative)},
                     {"edge_count", row.orbit.edge_count}}},
          {"containing", parts_json(row.containing)},
          {"lower", row.lower},
          {"upper", row.upper},
          {"lower_basis", row.lower_basis},
          {"upper_basis", row.upper_basis},
          {"exact", row.exact()}};
}

Json to_json(const CriticalityReport& report) {
  Json edges = Json::array();
  for (const auto& e : report.edges)
    edges.push_back({{"edge", to_json(e.edge)},
                     {"orbit_size", e.orbit_size},
                     {"estimate", to_json(e.estimate, false)},
                     {"verdict", to_string(e.verdict)}});
  return {{"graph_estimate", to_json(report.graph_estimate, false)},
          {"edges", std::move(edges)},
          {"overall", to_string(report.overall)}};
}

namespace {

Json step_json(const PruneStep& s) {
  return {{"edge", to_json(s.edge)},
          {"verdict", to_string(s.verdict)},
          {"deleted", s.deleted},
          {"estimate", to_json(s.estimate, false)}};
}

}  // namespace

Json to_json(const PruneResult& r) {
  Json deletions = Json::array();
  for (const auto& s : r.deletions) deletions.push_back(step_json(s));
  Json remaining = Json::array();
  for (const auto& s : r.remaining) remaining.push_back(step_json(s));
  return {{"graph", to_json(r.graph)},
          {"deletions", std::move(deletions)},
          {"remaining", std::move(remaining)},
          {"undecided", r.undecided}};
}

Json to_json(const DropCandidate& c) {
  Json j = {{"graph", to_json(c.graph)},
            {"before", to_json(c.before, false)},
            {"after", to_json(c.after, false)},
            {"isolated_after", c.isolated_after},
            {"certified_drop", c.certified_drop()},
            {"possible_drop", c.possible_drop()}};
  if (c.edge) j["edge"] = to_json(*c.edge);
  if (c.vertex) j["vertex"] = *c.vertex;
  return j;
}

Json to_json(const HuntReport& r) {
  auto list = [](const std::vector<DropCandidate>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(to_json(c));
    return a;
  };
  return {{"graphs_examined", r.graphs_examined},
          {"deletions_examined", r.deletions_examined},
          {"max_certified_drop", r.max_certified_drop},
          {"certified", list(r.certified)},
          {"undecided", list(r.undecided)},
          {"undecided_count", r.undecided.size()},
          {"witnesses", list(r.witnesses)},
          {"drop_at_least_3", r.max_certified_drop >= 3}};
}

Json to_json(const CycleOnCircle& c) {
  Json j = {{"feasible", c.feasible}, {"obstruction", to_string(c.obstruction)}};
  j["turn"] = c.turn ? Json(to_string(*c.turn)) : Json(nullptr);
  j["winding"] = c.winding ? Json(*c.winding) : Json(nullptr);
  return j;
}

Json to_json(const RationalAngle& a) {
  return {{"rational", a.is_rational()},
          {"multiple_of_pi", a.multiple_of_pi ? Json(to_string(*a.multiple_of_pi))
                                              : Json(nullptr)}};
}

}  // namespace dimcrit
