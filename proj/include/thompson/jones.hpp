#pragma once

#include "thompson/link_diagram.hpp"
#include "thompson/tait_graph.hpp"
#include "thompson/tree_pair.hpp"

namespace thompson {

// For every node P of the source tree, an upper + edge from v_{first leaf of
// P} to v_{first leaf of P's right child}; the target tree contributes lower
// - edges the same way. The pair need not be reduced.
TaitGraph tait_graph(const TreePair& p);

// Medial link of a signed planar Tait graph: one crossing per edge, a free
// loop per isolated vertex. On a + edge the strand running from the
// lower-left to the upper-right quadrant (edge drawn horizontally) passes
// over; on a - edge the other one does.
LinkDiagram medial_link(const TaitGraph& t);

// Closure construction on the tree diagram itself: each internal node of
// either tree becomes a crossing whose over-strand is the pair of edges to
// its children.
LinkDiagram direct_link(const TreePair& p);

// The link L_g used throughout: the direct construction.
inline LinkDiagram jones_link(const TreePair& p) { return direct_link(p); }

}  // namespace thompson
