#ifndef NDG_BROOKS_HPP
#define NDG_BROOKS_HPP

#include "ndg/decompose.hpp"
#include "ndg/graph.hpp"

#include <vector>

namespace ndg {

/// Per-vertex optional color; 0 means unassigned.
using PartialColoring = std::vector<int>;

/// Colors vertices in sequence order, smallest free color each.
/// Throws "not k-degenerate order" if some vertex has no free color.
Coloring greedy_color(const Graph& g, const std::vector<int>& order, int k);

/// Constructive Brooks coloring with at most `delta` colors.
/// Requires: connected, max degree <= delta, not K_{delta+1}, and for
/// delta = 2 not an odd cycle.
Coloring brooks_color(const Graph& g, int delta);

/// Extends a proper coloring of f(s1) to all of f.  The pivot v must be in
/// s1, adjacent to every other s1 vertex, have degree below k, and
/// f(s2 + {v}) must be connected.
Coloring extend_coloring_pivot(const Graph& f, const VertexSet& s1, const VertexSet& s2,
                               int v, const PartialColoring& pre_col, int k);

} // namespace ndg

#endif
