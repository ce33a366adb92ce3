#include "thompson/constructions.hpp"

#include "thompson/errors.hpp"

namespace thompson {
namespace {

// Source tree of g, expanded along the right spine to at least min_leaves
// leaves; the target stays a right comb.
BinaryTree positive_source(const TreePair& g, std::size_t min_leaves) {
  TreePair r = reduce(g);
  if (!is_positive(r)) throw Error("expected a positive element");
  BinaryTree t = r.source();
  while (t.leaf_count() < min_leaves) t = t.graft(t.leaf_count() - 1, BinaryTree::caret());
  return t;
}

}  // namespace

TreePair element_a() { return from_word(GeneratorWord::parse("x0^3 x2^-1 x0^-3")); }

TreePair attach_a(const TreePair& p) {
  static const TreePair a = element_a();
  return TreePair(a.source().graft(0, p.source()), a.target().graft(0, p.target()));
}

HSequence h_sequence(const TreePair& seed, std::size_t n) {
  if (n == 0) throw Error("sequence length must be at least 1");
  HSequence out{seed, {reduce(seed)}};
  while (out.elements.size() < n) out.elements.push_back(attach_a(out.elements.back()));
  return out;
}

BinaryTree tree_T(std::size_t n) {
  static const BinaryTree block = BinaryTree::node(BinaryTree::caret(), BinaryTree::leaf());
  BinaryTree t = BinaryTree::caret();
  for (std::size_t i = 0; i < n; ++i) t = t.graft(t.leaf_count() - 1, block);
  return t;
}

BinaryTree tree_S(std::size_t n) { return BinaryTree::node(BinaryTree::leaf(), tree_T(n)); }

TreePair g_element(std::size_t n) {
  BinaryTree t = tree_T(n);
  return TreePair(t, BinaryTree::right_comb(t.leaf_count()));
}

TreePair h_element(std::size_t n) {
  BinaryTree s = tree_S(n);
  return TreePair(s, BinaryTree::right_comb(s.leaf_count()));
}

TreePair conjugate(const TreePair& g, const TreePair& x) { return reduce(multiply(multiply(g, x), invert(g))); }

TreePair conjugate_x0_positive(const TreePair& g) {
  const BinaryTree t = positive_source(g, 2);
  return TreePair(t.graft(0, BinaryTree::caret()), t.graft(t.leaf_count() - 1, BinaryTree::caret()));
}

TreePair conjugate_x1_positive(const TreePair& g) {
  const BinaryTree t = positive_source(g, 3);
  return TreePair(t.graft(1, BinaryTree::caret()), t.graft(t.leaf_count() - 1, BinaryTree::caret()));
}

}  // namespace thompson
