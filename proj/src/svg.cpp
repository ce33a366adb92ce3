#include "thompson/svg.hpp"

#include <sstream>

namespace thompson {
namespace {

constexpr int kStep = 40;
constexpr int kMargin = 30;

int leaf_x(int k) { return kMargin + kStep * k; }

std::string header(int width, int height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  return out.str();
}

void draw_tree(std::ostringstream& out, const BinaryTree& tree, int baseline, int direction, const char* colour) {
  TreeLayout layout(tree);
  auto position = [&](const TreeLayout::Node& n) {
    double x = (leaf_x(n.first_leaf) + leaf_x(n.last_leaf)) / 2.0;
    double y = baseline - direction * (n.last_leaf - n.first_leaf) * kStep / 2.0;
    return std::pair{x, y};
  };
  for (const auto& n : layout.nodes) {
    if (n.is_leaf()) continue;
    auto [x, y] = position(n);
    for (int c : {n.left, n.right}) {
      auto [cx, cy] = position(layout.nodes[c]);
      out << "  <line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << cx << "\" y2=\"" << cy << "\" stroke=\"" << colour
          << "\" stroke-width=\"2\"/>\n";
    }
  }
  auto [rx, ry] = position(layout.nodes[0]);
  out << "  <line x1=\"" << rx << "\" y1=\"" << ry << "\" x2=\"" << rx << "\" y2=\"" << ry - direction * kStep / 2
      << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string tree_pair_svg(const TreePair& p) {
  const int n = static_cast<int>(p.leaf_count());
  const int half = (n - 1) * kStep / 2 + kStep;
  const int width = 2 * kMargin + (n - 1) * kStep;
  const int height = 2 * half + 2 * kMargin;
  const int baseline = kMargin + half;
  std::ostringstream out;
  out << header(width, height);
  draw_tree(out, p.source(), baseline, 1, "black");
  draw_tree(out, p.target(), baseline, -1, "black");
  for (int k = 0; k < n; ++k) {
    out << "  <circle cx=\"" << leaf_x(k) << "\" cy=\"" << baseline << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string tait_graph_svg(const TaitGraph& t) {
  const int n = t.vertex_count();
  const int reach = (n - 1) * kStep / 2 + kStep / 2;
  const int width = 2 * kMargin + (n - 1) * kStep;
  const int height = 2 * reach + 2 * kMargin;
  const int baseline = kMargin + reach;
  std::ostringstream out;
  out << header(width, height);
  for (const TaitEdge& e : t.edges()) {
    const int r = (e.right - e.left) * kStep / 2;
    const int sweep = e.half == Half::upper ? 1 : 0;
    out << "  <path d=\"M " << leaf_x(e.left) << ' ' << baseline << " A " << r << ' ' << r << " 0 0 " << sweep << ' '
        << leaf_x(e.right) << ' ' << baseline << "\" fill=\"none\" stroke=\""
        << (e.sign == Sign::positive ? "firebrick" : "steelblue") << "\" stroke-width=\"2\"/>\n";
  }
  for (int k = 0; k < n; ++k) {
    out << "  <circle cx=\"" << leaf_x(k) << "\" cy=\"" << baseline << "\" r=\"4\" fill=\"black\"/>\n"
        << "  <text x=\"" << leaf_x(k) + 4 << "\" y=\"" << baseline + 14 << "\" font-size=\"10\">v" << k << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace thompson
