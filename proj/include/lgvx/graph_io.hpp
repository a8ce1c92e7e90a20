#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lgvx/aztec.hpp"
#include "lgvx/drawing.hpp"

namespace lgvx {

// Line-oriented graph file:
//
//   # comment
//   variables x y
//   vertex <id> <int-x> <int-y>
//   edge <src-id> <dst-id> <weight> [supergraph_only]
//   source <id>
//   sink <id>
//   starts <id> ...
//   ends <id> ...
//
// Edge weights are whitespace-free polynomial tokens (see WeightPoly).
// `starts`/`ends` are optional but must appear together.
struct ParsedGraph {
    Drawing drawing;
    std::optional<MarkedConfig> config;
};

// Parses and validates; throws parse_error with a position for malformed
// text and input_error listing violated drawing invariants otherwise.
ParsedGraph parse_graph_file(std::string_view text);
std::string emit_graph_file(const Drawing& d, const MarkedConfig* config);

// Region file:
//
//   aztec <m> <n>
//   hole <i> <j>
AztecRegion parse_region_file(std::string_view text);
std::string emit_region_file(const AztecRegion& r);

} // namespace lgvx
