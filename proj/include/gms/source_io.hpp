#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gms/graph.hpp"
#include "gms/reductions.hpp"

namespace gms {

/// Source graph for the reduction generators, DIMACS style with 1-based ids:
///
///     p edge <n> <m>
///     e <u> <v>
///     n <v> <color>     optional, colors 1..k'
///
/// `c` lines are comments. `colors` is empty unless every vertex received one; colors are
/// stored 0-based.
struct SourceGraph {
    StaticGraph graph;
    std::vector<int> colors;
};

SourceGraph parse_source_graph(std::string_view text);
std::string serialize_source_graph(const SourceGraph& g);

/// Set family with 1-based elements:
///
///     p sets <universe> <count>
///     s <e1> <e2> ...
SetFamily parse_set_family(std::string_view text);
std::string serialize_set_family(const SetFamily& f);

/// Whitespace-separated 1-based ids (vertices, elements or set indices); returned 0-based.
std::vector<std::size_t> parse_certificate(std::string_view text);

} // namespace gms
