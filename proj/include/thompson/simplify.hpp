#pragma once

#include "thompson/link_diagram.hpp"

namespace thompson {

struct SimplificationReport {
  LinkDiagram diagram;
  // Crossing-free components that appeared during simplification (free loops
  // in the result minus free loops in the input).
  int removed_unknots = 0;
  int r1_moves = 0;
  int r2_moves = 0;
};

// Greedy monotone simplification: Reidemeister I kinks (an arc leaving and
// re-entering the same crossing through adjacent ports) and Reidemeister II
// bigons (two crossings joined by two arcs bounding a face, one strand over at
// both). Every move removes crossings, so this terminates.
SimplificationReport simplify(const LinkDiagram& d);

}  // namespace thompson
