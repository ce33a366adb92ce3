#pragma once

#include <string>

#include "thompson/tait_graph.hpp"
#include "thompson/tree_pair.hpp"

namespace thompson {

// Source tree drawn above the leaf line, target tree mirrored below it.
std::string tree_pair_svg(const TreePair& p);

// Vertices on a line; upper edges as arcs above, lower edges as arcs below.
std::string tait_graph_svg(const TaitGraph& t);

}  // namespace thompson
