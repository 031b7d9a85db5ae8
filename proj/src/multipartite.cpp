#include "dimcrit/multipartite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace dimcrit {

int multipartite_formula(int alpha, int beta, int gamma) {
  const int base = alpha + beta + 2 * gamma;
  return beta + gamma <= 1 ? base - 1 : base;
}

MultipartiteDimension multipartite_dimension(const PartitionSpec& spec) {
  if (spec.part_count() == 1 && spec.parts()[0] >= 2)
    return {1, DimensionBasis::EdgelessConvention};
  return {multipartite_formula(spec.alpha(), spec.beta(), spec.gamma_3plus()),
          DimensionBasis::Formula};
}

int dimension_of_parts(std::vector<int> parts) {
  std::erase(parts, 0);
  if (parts.empty()) return 0;
  return multipartite_dimension(PartitionSpec(std::move(parts))).value;
}

std::string to_string(CriticalityRule rule) {
  switch (rule) {
    case CriticalityRule::CompleteGraph: return "complete-graph";
    case CriticalityRule::FourCycle: return "four-cycle";
    case CriticalityRule::Claw: return "claw";
    case CriticalityRule::K23: return "k23";
    case CriticalityRule::AlphaZeroGamma: return "alpha-zero-gamma";
    case CriticalityRule::PartAtLeast4: return "part-at-least-4";
    case CriticalityRule::K2: return "k2";
    case CriticalityRule::AlphaOneZero: return "alpha-one-zero";
    case CriticalityRule::AlphaOneOne: return "alpha-one-one";
    case CriticalityRule::AlphaTwoZero: return "alpha-two-zero";
    case CriticalityRule::AlphaZeroOne: return "alpha-zero-one";
    case CriticalityRule::BetaGammaAtLeast3: return "beta-gamma-at-least-3";
  }
  return "unknown";
}

namespace {

std::string g_name(int a, int b, int c) {
  std::ostringstream os;
  os << "G(" << a << "," << b << "," << c << ")";
  return os.str();
}

std::string parts_name(const std::vector<int>& parts) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

}  // namespace

CriticalityVerdict classify_multipartite_criticality(const PartitionSpec& spec) {
  if (spec.part_count() < 2)
    throw DomainError("criticality needs a connected graph with >= 2 parts");
  const int dim = multipartite_dimension(spec).value;

  if (spec.has_part_at_least(4)) {
    std::vector<int> reduced = spec.parts();
    reduced.front() -= 1;  // descending order: front is the largest part
    return {false, CriticalityRule::PartAtLeast4,
            "delete a vertex of a part of size " + std::to_string(spec.parts().front()) +
                ": G - v = " + parts_name(PartitionSpec(reduced).parts()) +
                " keeps dimension " + std::to_string(dimension_of_parts(reduced))};
  }

  const int a = spec.alpha();
  const int b = spec.beta();
  const int c = spec.gamma_exact3();
  const std::string d = std::to_string(dim);

  if (b == 0 && c == 0) {
    if (a == 2)
      return {false, CriticalityRule::K2,
              "delete the only edge: two isolated vertices do not fit in R^0, "
              "dimension stays 1"};
    return {true, CriticalityRule::CompleteGraph,
            "K_" + std::to_string(a) + " - e = " + g_name(a - 2, 1, 0) +
                " has dimension " + std::to_string(a - 2) + " < " + d};
  }
  if (a == 0 && b == 2 && c == 0)
    return {true, CriticalityRule::FourCycle,
            "C_4 - e is the path P_4, dimension 1 < 2"};
  if (a == 1 && b == 0 && c == 1)
    return {true, CriticalityRule::Claw,
            "K_{1,3} - e is a path plus an isolated vertex, dimension 1 < 2"};
  if (a == 0 && b == 1 && c == 1)
    return {true, CriticalityRule::K23, "K_{2,3} - e has dimension 2 < 3"};
  if (b == 0 && c >= 2) {
    std::string w = "every edge deletion lands in a supergraph of dimension " +
                    std::to_string(dim - 1) + ": ";
    if (a >= 2) w += "a1a2 -> " + g_name(a - 2, 1, c) + ", ";
    w += "b1b2 -> " + g_name(a, 3, c - 2);
    if (a >= 1) w += ", a1b1 -> " + g_name(a - 1, 2, c - 1);
    return {true, CriticalityRule::AlphaZeroGamma, w};
  }
  if (b >= 1 && b + c >= 3)
    return {false, CriticalityRule::BetaGammaAtLeast3,
            "delete a vertex of a size-2 part: G - v = " + g_name(a + 1, b - 1, c) +
                " keeps dimension " + d};
  if (b == 1 && c == 0)
    return {false, CriticalityRule::AlphaOneZero,
            "delete a vertex of the size-2 part: G - v = K_" + std::to_string(a + 1) +
                " keeps dimension " + d};
  if (b == 1 && c == 1)
    return {false, CriticalityRule::AlphaOneOne,
            "delete edges a1b1 and a1c1 ({b1,c1} the size-2 part): the result " +
                g_name(a - 1, 0, 2) + " keeps dimension " + d};
  if (b == 2 && c == 0)
    return {false, CriticalityRule::AlphaTwoZero,
            "delete edges a1b1 and a1c1 ({b1,c1} a size-2 part): the result " +
                g_name(a - 1, 1, 1) + " keeps dimension " + d};
  // Remaining shape: b == 0, c == 1, a >= 2.
  return {false, CriticalityRule::AlphaZeroOne,
          "delete edge a1a2 between singleton parts: the result " +
              g_name(a - 2, 1, 1) + " keeps dimension " + d};
}

std::vector<EdgeOrbit> multipartite_edge_orbits(const PartitionSpec& spec) {
  const auto& parts = spec.parts();
  std::vector<int> first_vertex(parts.size(), 0);
  for (std::size_t i = 1; i < parts.size(); ++i)
    first_vertex[i] = first_vertex[i - 1] + parts[i - 1];

  std::vector<EdgeOrbit> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const int big = parts[i];
      const int small = parts[j];
      auto it = std::find_if(out.begin(), out.end(), [&](const EdgeOrbit& o) {
        return o.larger_part == big && o.smaller_part == small;
      });
      if (it == out.end()) {
        out.push_back({big, small, Edge{first_vertex[i], first_vertex[j]}, 0});
        it = std::prev(out.end());
      }
      it->edge_count += static_cast<long long>(big) * small;
    }
  }
  return out;
}

namespace {

struct Bound {
  int value;
  std::string basis;
};

// Part lists derived from the spec with part i (size P) and part j (size Q)
// touched by the deleted edge uv, u in i and v in j.
std::vector<int> without(std::vector<int> parts, std::size_t i) {
  parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
  return parts;
}

}  // namespace

std::vector<DeletionRow> multipartite_deletion_table(const PartitionSpec& spec) {
  if (spec.part_count() < 2)
    throw DomainError("deletion table needs >= 2 parts");
  const int dim_g = multipartite_dimension(spec).value;
  const Graph g = build_multipartite(spec);
  const auto& parts = spec.parts();

  std::vector<DeletionRow> rows;
  for (const auto& orbit : multipartite_edge_orbits(spec)) {
    // Locate the part indices of the representative endpoints.
    std::size_t pi = 0;
    std::size_t pj = 0;
    {
      int acc = 0;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (orbit.representative.u >= acc && orbit.representative.u < acc + parts[k]) pi = k;
        if (orbit.representative.v >= acc && orbit.representative.v < acc + parts[k]) pj = k;
        acc += parts[k];
      }
    }
    const int p = parts[pi];
    const int q = parts[pj];
    std::vector<int> others;
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (k != pi && k != pj) others.push_back(parts[k]);

    std::vector<int> containing = others;
    containing.push_back(2);
    if (p > 1) containing.push_back(p - 1);
    if (q > 1) containing.push_back(q - 1);

    const Graph minus = delete_edge(g, orbit.representative);

    std::vector<Bound> uppers{
        {dim_g, "subgraph of G"},
        {dimension_of_parts(containing), "subgraph of " + parts_name(PartitionSpec(containing).parts())},
        {dimension_upper_bound_trivial(minus),
         is_path_forest(minus) ? "path forest" : "simplex"},
    };

    auto minus_vertex = [&](std::size_t k) {
      std::vector<int> r = parts;
      r[k] -= 1;
      return r;
    };
    auto merged_into = [&](std::size_t dropped, std::size_t grown) {
      // Delete the rest of part `dropped`, move its endpoint into `grown`.
      std::vector<int> r = parts;
      r[grown] += 1;
      return without(r, dropped);
    };

    std::vector<Bound> lowers{
        {dimension_of_parts(minus_vertex(pi)), "G - u"},
        {dimension_of_parts(minus_vertex(pj)), "G - v"},
        {dimension_of_parts(merged_into(pi, pj)), "u moved into v's part"},
        {dimension_of_parts(merged_into(pj, pi)), "v moved into u's part"},
        {dimension_lower_bound(minus), "clique/path-forest/vertex-count"},
    };
    if (auto sub = best_multipartite_subgraph(minus))
      lowers.push_back({sub->dimension,
                        "multipartite subgraph " + parts_name(sub->spec.parts())});

    auto best_upper = std::min_element(uppers.begin(), uppers.end(),
        [](const Bound& x, const Bound& y) { return x.value < y.value; });
    auto best_lower = std::max_element(lowers.begin(), lowers.end(),
        [](const Bound& x, const Bound& y) { return x.value < y.value; });

    DeletionRow row;
    row.orbit = orbit;
    row.containing = PartitionSpec(containing);
    row.lower = best_lower->value;
    row.upper = best_upper->value;
    row.lower_basis = best_lower->basis;
    row.upper_basis = best_upper->basis;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<MultipartiteSubgraph> best_multipartite_subgraph(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMultipartiteSubgraphCutoff || n < 2) return std::nullopt;

  std::vector<std::vector<Vertex>> parts;
  std::optional<MultipartiteSubgraph> best;

  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v == n) {
      if (parts.size() < 2) return;
      std::vector<int> sizes;
      for (const auto& p : parts) sizes.push_back(static_cast<int>(p.size()));
      PartitionSpec spec(sizes);
      const int d = multipartite_dimension(spec).value;
      if (!best || d > best->dimension) best = MultipartiteSubgraph{d, spec, parts};
      return;
    }
    assign(v + 1);  // leave v out
    for (std::size_t k = 0; k <= parts.size(); ++k) {
      bool ok = true;
      for (std::size_t other = 0; other < parts.size() && ok; ++other) {
        if (other == k) continue;
        for (Vertex w : parts[other])
          if (!g.adjacent(v, w)) {
            ok = false;
            break;
          }
      }
      if (!ok) continue;
      if (k == parts.size()) parts.push_back({});
      parts[k].push_back(v);
      assign(v + 1);
      parts[k].pop_back();
      if (parts[k].empty()) parts.pop_back();
    }
  };
  assign(0);
  return best;
}

}  // namespace dimcrit
