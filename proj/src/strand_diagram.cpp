#include "thompson/strand_diagram.hpp"

#include "thompson/errors.hpp"

namespace thompson {
namespace {

struct TreeBuilder {
  StrandGraph& g;
  const std::string& bits;
  std::size_t pos = 0;

  // Builds splits below the out-port `from`; appends the leaf out-ports.
  void splits(Port from, std::vector<Port>& leaves) {
    if (bits[pos++] == '0') {
      leaves.push_back(from);
      return;
    }
    int v = g.add_vertex(VertexKind::split);
    pending.push_back({from, {v, 0}});
    splits({v, 1}, leaves);
    splits({v, 2}, leaves);
  }

  // Builds merges above the in-port `to`; appends the leaf in-ports.
  void merges(Port to, std::vector<Port>& leaves) {
    if (bits[pos++] == '0') {
      leaves.push_back(to);
      return;
    }
    int v = g.add_vertex(VertexKind::merge);
    pending.push_back({{v, 2}, to});
    merges({v, 0}, leaves);
    merges({v, 1}, leaves);
  }

  std::vector<std::pair<Port, Port>> pending;
};

}  // namespace

StrandDiagram::StrandDiagram(StrandGraph graph) : graph_(std::move(graph)) {
  for (int v = 0; v < static_cast<int>(graph_.vertices().size()); ++v) {
    const auto& x = graph_.vertex(v);
    if (!x.alive) continue;
    for (int s = 0; s < slot_count(x.kind); ++s) {
      if (x.edge[s] < 0) throw InvalidDiagram("strand diagram has an unconnected slot");
    }
    if (x.kind == VertexKind::source) {
      if (source_ >= 0) throw InvalidDiagram("strand diagram needs exactly one source");
      source_ = v;
    } else if (x.kind == VertexKind::sink) {
      if (sink_ >= 0) throw InvalidDiagram("strand diagram needs exactly one sink");
      sink_ = v;
    }
  }
  if (source_ < 0 || sink_ < 0) throw InvalidDiagram("strand diagram needs a source and a sink");
}

std::size_t StrandDiagram::split_count() const {
  std::size_t n = 0;
  for (const auto& v : graph_.vertices()) n += v.alive && v.kind == VertexKind::split;
  return n;
}

std::size_t StrandDiagram::merge_count() const {
  std::size_t n = 0;
  for (const auto& v : graph_.vertices()) n += v.alive && v.kind == VertexKind::merge;
  return n;
}

StrandDiagram strand_from_pair(const TreePair& p) {
  StrandGraph g;
  int top = g.add_vertex(VertexKind::source);
  int bottom = g.add_vertex(VertexKind::sink);
  std::vector<Port> upper, lower;
  TreeBuilder a{g, p.source().bits(), 0, {}};
  a.splits({top, 0}, upper);
  TreeBuilder b{g, p.target().bits(), 0, {}};
  b.merges({bottom, 0}, lower);
  for (auto [t, h] : a.pending) g.add_edge(t, h);
  for (auto [t, h] : b.pending) g.add_edge(t, h);
  for (std::size_t i = 0; i < upper.size(); ++i) g.add_edge(upper[i], lower[i]);
  return StrandDiagram(std::move(g));
}

StrandDiagram reduce(const StrandDiagram& s) {
  StrandGraph g = s.graph();
  for (auto moves = g.find_moves(); !moves.empty(); moves = g.find_moves()) {
    if (g.apply(moves.front()).loops_created > 0) throw InvalidDiagram("closed loop in a strand diagram");
  }
  return StrandDiagram(g.compacted());
}

StrandDiagram concatenate(const StrandDiagram& a, const StrandDiagram& b) {
  const StrandGraph& ga = a.graph();
  const StrandGraph& gb = b.graph();
  StrandGraph out;
  std::vector<int> map_a(ga.vertices().size(), -1);
  std::vector<int> map_b(gb.vertices().size(), -1);
  for (std::size_t v = 0; v < ga.vertices().size(); ++v) {
    if (ga.vertex(v).alive && static_cast<int>(v) != a.sink()) map_a[v] = out.add_vertex(ga.vertex(v).kind);
  }
  for (std::size_t v = 0; v < gb.vertices().size(); ++v) {
    if (gb.vertex(v).alive && static_cast<int>(v) != b.source()) map_b[v] = out.add_vertex(gb.vertex(v).kind);
  }
  for (const auto& e : ga.edges()) {
    if (e.alive && e.head.vertex != a.sink()) {
      out.add_edge({map_a[e.tail.vertex], e.tail.slot}, {map_a[e.head.vertex], e.head.slot}, e.winding);
    }
  }
  for (const auto& e : gb.edges()) {
    if (e.alive && e.tail.vertex != b.source()) {
      out.add_edge({map_b[e.tail.vertex], e.tail.slot}, {map_b[e.head.vertex], e.head.slot}, e.winding);
    }
  }
  const auto& upper = ga.edge(ga.vertex(a.sink()).edge[0]);
  const auto& lower = gb.edge(gb.vertex(b.source()).edge[0]);
  out.add_edge({map_a[upper.tail.vertex], upper.tail.slot}, {map_b[lower.head.vertex], lower.head.slot},
               upper.winding + lower.winding);
  return reduce(StrandDiagram(std::move(out)));
}

TreePair to_tree_pair(const StrandDiagram& s) {
  const StrandGraph& g = s.graph();
  std::vector<int> upper_leaves, lower_leaves;
  auto down = [&](auto& self, int e) -> BinaryTree {
    const auto& v = g.vertex(g.edge(e).head.vertex);
    if (v.kind != VertexKind::split) {
      upper_leaves.push_back(e);
      return BinaryTree::leaf();
    }
    return BinaryTree::node(self(self, v.edge[1]), self(self, v.edge[2]));
  };
  auto up = [&](auto& self, int e) -> BinaryTree {
    const auto& v = g.vertex(g.edge(e).tail.vertex);
    if (v.kind != VertexKind::merge) {
      lower_leaves.push_back(e);
      return BinaryTree::leaf();
    }
    return BinaryTree::node(self(self, v.edge[0]), self(self, v.edge[1]));
  };
  BinaryTree source = down(down, g.vertex(s.source()).edge[0]);
  BinaryTree target = up(up, g.vertex(s.sink()).edge[0]);
  if (source.internal_count() != s.split_count() || target.internal_count() != s.merge_count() ||
      upper_leaves != lower_leaves) {
    throw InvalidDiagram("strand diagram is not reduced to tree form");
  }
  return TreePair(source, target);
}

}  // namespace thompson
