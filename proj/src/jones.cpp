#include "thompson/jones.hpp"

#include <algorithm>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

void add_tree_edges(const BinaryTree& tree, Half half, std::vector<TaitEdge>& out) {
  TreeLayout t(tree);
  for (const auto& node : t.nodes) {
    if (node.is_leaf()) continue;
    out.push_back(TaitEdge{node.first_leaf, t.nodes[node.right].first_leaf, half,
                           half == Half::upper ? Sign::positive : Sign::negative});
  }
}

// Crossing ports for an edge u-v (u < v), counterclockwise with the edge
// drawn left to right: NE, NW, SW, SE. Side names are relative to walking
// the edge away from the endpoint.
enum MedialSlot { v_right = 0, u_left = 1, u_right = 2, v_left = 3 };

struct Incidence {
  int edge;
  bool at_left_end;  // this vertex is the edge's left endpoint
};

}  // namespace

TaitGraph tait_graph(const TreePair& p) {
  std::vector<TaitEdge> edges;
  add_tree_edges(p.source(), Half::upper, edges);
  add_tree_edges(p.target(), Half::lower, edges);
  return TaitGraph(static_cast<int>(p.leaf_count()), std::move(edges));
}

LinkDiagram medial_link(const TaitGraph& t) {
  t.validate();
  const auto& edges = t.edges();
  DiagramBuilder b;
  for (const TaitEdge& e : edges) b.add_crossing(e.sign == Sign::negative);

  // Counterclockwise rotation at each vertex, starting from the east.
  std::vector<std::vector<Incidence>> rotation(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::vector<std::pair<int, int>> up_right, up_left, low_left, low_right;  // (sort key, edge)
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const TaitEdge& e = edges[i];
      if (e.half == Half::upper) {
        if (e.left == v) up_right.push_back({e.right, i});
        if (e.right == v) up_left.push_back({e.left, i});
      } else {
        if (e.right == v) low_left.push_back({-e.left, i});
        if (e.left == v) low_right.push_back({-e.right, i});
      }
    }
    for (auto* group : {&up_right, &up_left, &low_left, &low_right}) {
      std::sort(group->begin(), group->end());
      for (auto [key, i] : *group) rotation[v].push_back({i, edges[i].left == v});
    }
  }

  int isolated = 0;
  for (const auto& rot : rotation) {
    if (rot.empty()) {
      ++isolated;
      continue;
    }
    // Corner between consecutive edges: left side of the first, right side of
    // the next.
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const Incidence& a = rot[k];
      const Incidence& c = rot[(k + 1) % rot.size()];
      int a_slot = a.at_left_end ? u_left : v_left;
      int c_slot = c.at_left_end ? u_right : v_right;
      b.connect({a.edge, a_slot}, {c.edge, c_slot});
    }
  }
  b.add_free_loops(isolated);
  return b.build();
}

LinkDiagram direct_link(const TreePair& p) {
  if (p.leaf_count() == 1) return LinkDiagram::unknot();
  TreeLayout top(p.source());
  TreeLayout bottom(p.target());
  // Source node ports (ccw): parent, left, gap edge, right.
  // Target node ports (ccw, the tree hangs upside down): parent, right, gap, left.
  enum { parent = 0, top_left = 1, gap = 2, top_right = 3 };
  enum { bottom_right = 1, bottom_left = 3 };

  DiagramBuilder b;
  std::vector<int> top_id(top.nodes.size(), -1);
  std::vector<int> bottom_id(bottom.nodes.size(), -1);
  std::vector<int> top_by_gap(p.leaf_count(), -1);
  std::vector<int> bottom_by_gap(p.leaf_count(), -1);
  for (std::size_t i = 0; i < top.nodes.size(); ++i) {
    if (top.nodes[i].is_leaf()) continue;
    top_id[i] = b.add_crossing(true);
    top_by_gap[top.nodes[top.nodes[i].right].first_leaf] = top_id[i];
  }
  for (std::size_t i = 0; i < bottom.nodes.size(); ++i) {
    if (bottom.nodes[i].is_leaf()) continue;
    bottom_id[i] = b.add_crossing(true);
    bottom_by_gap[bottom.nodes[bottom.nodes[i].right].first_leaf] = bottom_id[i];
  }

  // Port of the bottom tree that receives the strand coming down through leaf k.
  auto bottom_leaf_port = [&](int k) {
    int leaf = bottom.leaf_nodes[k];
    int par = bottom.nodes[leaf].parent;
    return DiagramBuilder::Port{bottom_id[par], bottom.nodes[par].left == leaf ? bottom_left : bottom_right};
  };

  for (std::size_t i = 0; i < top.nodes.size(); ++i) {
    const auto& n = top.nodes[i];
    if (n.is_leaf()) continue;
    for (int child : {n.left, n.right}) {
      int slot = child == n.left ? top_left : top_right;
      const auto& c = top.nodes[child];
      if (c.is_leaf()) {
        b.connect({top_id[i], slot}, bottom_leaf_port(c.leaf_index));
      } else {
        b.connect({top_id[i], slot}, {top_id[child], parent});
      }
    }
  }
  for (std::size_t i = 0; i < bottom.nodes.size(); ++i) {
    const auto& n = bottom.nodes[i];
    if (n.is_leaf()) continue;
    for (int child : {n.left, n.right}) {
      if (bottom.nodes[child].is_leaf()) continue;  // wired from above
      b.connect({bottom_id[i], child == n.left ? bottom_left : bottom_right}, {bottom_id[child], parent});
    }
  }
  for (std::size_t k = 1; k < p.leaf_count(); ++k) b.connect({top_by_gap[k], gap}, {bottom_by_gap[k], gap});
  // The strand through w_0 joins the two roots around the left side.
  b.connect({top_id[0], parent}, {bottom_id[0], parent});
  return b.build();
}

}  // namespace thompson
