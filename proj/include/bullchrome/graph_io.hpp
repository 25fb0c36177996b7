#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bullchrome/graph.hpp"

namespace bullchrome {

/// Parses one graph6 line (an optional ">>graph6<<" prefix and trailing
/// newline are accepted). Throws ParseError with a distinct kind for an
/// empty line, a malformed size header, characters outside '?'..'~', a
/// wrong byte count, and nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Whitespace-separated "n m" header followed by m "u v" pairs, 0-indexed.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

enum class GraphFormat { automatic, graph6, edgelist };

GraphFormat parse_format_name(std::string_view name);

/// Reads every graph in `text`: one per non-empty line for graph6, a single
/// graph for an edge list. `automatic` picks edge-list when the first
/// non-empty line contains whitespace.
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format = GraphFormat::automatic);

/// Graphviz DOT. When `colors` is non-empty each vertex carries its color.
std::string emit_dot(const Graph& g, const std::vector<int>& colors = {});

}  // namespace bullchrome
