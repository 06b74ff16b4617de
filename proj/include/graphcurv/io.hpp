#pragma once

#include <string>
#include <string_view>

#include "graphcurv/graph.hpp"

namespace graphcurv {

enum class GraphFormat { edge_list, json };

/// "edge_list" or "json"; throws InputError otherwise.
GraphFormat parse_format(std::string_view name);

/// edge_list: one edge per line as two base-10 ids; blank lines and lines
/// starting with '#' are skipped; an optional "n <count>" line fixes the
/// order, otherwise n = 1 + max id.
/// json: {"n": N, "edges": [[u, v], ...]}.
/// Throws ParseError with line/column on malformed input.
Graph parse_graph(std::string_view source, GraphFormat format);

/// edge_list output always starts with an "n <count>" line so isolated
/// vertices survive the round trip.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Reads a file and parses it; the format is json when the first
/// non-whitespace character is '{', edge_list otherwise.
Graph load_graph(const std::string& path);

}  // namespace graphcurv
