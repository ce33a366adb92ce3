#pragma once

#include "thompson/strand_graph.hpp"
#include "thompson/tree_pair.hpp"

namespace thompson {

// Strand diagram in the unit square: one source, one sink, splits and merges.
class StrandDiagram {
 public:
  explicit StrandDiagram(StrandGraph graph);

  const StrandGraph& graph() const { return graph_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  std::size_t split_count() const;
  std::size_t merge_count() const;

 private:
  StrandGraph graph_;
  int source_ = -1;
  int sink_ = -1;
};

// Splits from the source tree, merges from the target tree, leaf i of one
// joined to leaf i of the other.
StrandDiagram strand_from_pair(const TreePair& p);

// Applies type I and type II moves until none is left.
StrandDiagram reduce(const StrandDiagram& s);

// Sink of a glued to source of b, then reduced.
StrandDiagram concatenate(const StrandDiagram& a, const StrandDiagram& b);

// Reads the tree pair off a reduced diagram (all splits above all merges).
// Throws InvalidDiagram otherwise.
TreePair to_tree_pair(const StrandDiagram& s);

}  // namespace thompson
