#pragma once

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

struct SpanningTreeCount {
  BigInt count;
  /// Set when the graph is disconnected; count is then 0.
  bool disconnected = false;
};

/// Number of spanning trees: the determinant of the Laplacian with its last
/// row and column removed, by fraction-free (Bareiss) elimination over exact
/// integers. Throws InputError on the empty graph.
SpanningTreeCount spanning_tree_count(const Graph& g);

}  // namespace graphcurv
