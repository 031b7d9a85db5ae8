#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dimcrit/embed_search.hpp"
#include "dimcrit/geometry.hpp"
#include "dimcrit/graph.hpp"
#include "dimcrit/hunt.hpp"
#include "dimcrit/multipartite.hpp"

namespace dimcrit {

using Json = nlohmann::json;

// Malformed or mistyped JSON. The CLI maps this to exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json_text(std::string_view text);

/// Serializes with sorted keys and 17 significant digits for every float;
/// non-finite floats become null. Arrays of scalars stay on one line.
std::string dump_json(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const PartitionSpec& spec);
PartitionSpec partition_from_json(const Json& j);

Json to_json(const Embedding& emb);
Embedding embedding_from_json(const Json& j);

Json to_json(const Edge& e);
Json to_json(const VerificationReport& report);
Json to_json(const DimensionEstimate& est);
Json to_json(const CriticalityVerdict& verdict);
Json to_json(const DeletionRow& row);
Json to_json(const CriticalityReport& report);
Json to_json(const PruneResult& result);
Json to_json(const DropCandidate& cand);
Json to_json(const HuntReport& report);
Json to_json(const CycleOnCircle& result);
Json to_json(const RationalAngle& angle);

// Estimates inside reports can omit their embeddings to keep output small.
Json to_json(const DimensionEstimate& est, bool with_embedding);

}  // namespace dimcrit
