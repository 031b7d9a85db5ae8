#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dimcrit/geometry.hpp"
#include "dimcrit/graph.hpp"

namespace dimcrit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIo = 2;

/// Command-line entry point. `args` excludes the program name. Results go
/// to `out` (or the --output file); errors go to `err` as
/// {"error": {"code", "message"}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Columnar plot data: a "# points" block with one "x y" row per vertex on
/// the chosen coordinate axes, then a "# edges" block of "u v" index rows.
std::string emit_plot_data(const Embedding& emb, const Graph& g, int axis_x, int axis_y);

}  // namespace dimcrit
