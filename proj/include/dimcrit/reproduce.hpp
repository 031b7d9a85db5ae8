#pragma once

#include <string>
#include <vector>

#include "dimcrit/embed_search.hpp"
#include "dimcrit/json_io.hpp"

namespace dimcrit {

struct CheckResult {
  std::string id;
  bool passed = false;
  Json details;
};

// Check identifiers in the order `all` runs them.
const std::vector<std::string>& reproduce_check_ids();

// Every part list with at most max_vertices vertices and at least two parts.
std::vector<PartitionSpec> small_partitions(int max_vertices);

/// Runs one named check. Unknown ids throw DomainError. Output contains no
/// timings, so equal seeds give byte-identical JSON.
CheckResult run_check(const std::string& id, const SearchConfig& cfg);

// `id` may be "all". {"seed", "checks": [...], "passed"}.
Json run_reproduce(const std::string& id, const SearchConfig& cfg);

}  // namespace dimcrit
