#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

// A rooted finite binary tree, stored as its preorder bitstring: a leaf is
// "0", an internal node is "1" followed by its left and right subtrees.
// Values are immutable; every operation returns a new tree.
class BinaryTree {
 public:
  BinaryTree();  // single leaf

  static BinaryTree leaf();
  static BinaryTree caret();
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  // Every left child is a leaf: (•(•(•…))).
  static BinaryTree right_comb(std::size_t leaves);
  // Throws ParseError on anything that is not a complete preorder encoding.
  static BinaryTree from_bits(std::string_view bits);

  const std::string& bits() const { return bits_; }
  std::size_t leaf_count() const { return (bits_.size() + 1) / 2; }
  std::size_t internal_count() const { return bits_.size() / 2; }
  bool is_leaf() const { return bits_.size() == 1; }

  BinaryTree left() const;
  BinaryTree right() const;

  bool is_right_comb() const;

  // Replace leaf `leaf_index` by `subtree`.
  BinaryTree graft(std::size_t leaf_index, const BinaryTree& subtree) const;
  // Replace every leaf k by subtrees[k]; subtrees.size() must equal leaf_count().
  BinaryTree graft_all(std::span<const BinaryTree> subtrees) const;

  // Leaf indices i such that leaves i and i+1 are the two children of one node.
  std::vector<std::size_t> caret_leaves() const;
  // Collapse the caret whose leaves are i, i+1 into a single leaf.
  BinaryTree collapse_caret(std::size_t i) const;

  // For a refinement `fine` of this tree (this tree is a rooted subtree of it),
  // the subtree of `fine` hanging below each of this tree's leaves.
  std::vector<BinaryTree> leaf_subtrees_in(const BinaryTree& fine) const;

  // Least common refinement (union of the two trees as rooted subtrees of the
  // infinite binary tree).
  friend BinaryTree common_refinement(const BinaryTree& a, const BinaryTree& b);

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  explicit BinaryTree(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

// Indexed view of a tree used by the constructions that need parent links and
// leaf intervals. Nodes are stored in preorder; node 0 is the root.
struct TreeLayout {
  struct Node {
    int parent = -1;
    int left = -1;   // -1 for leaves
    int right = -1;
    int first_leaf = 0;  // leftmost leaf index below this node
    int last_leaf = 0;
    int leaf_index = -1;  // for leaves
    bool on_right_spine = false;
    bool is_leaf() const { return left < 0; }
  };
  std::vector<Node> nodes;
  std::vector<int> leaf_nodes;  // node index of leaf k

  explicit TreeLayout(const BinaryTree& tree);
  std::size_t leaf_count() const { return leaf_nodes.size(); }
};

}  // namespace thompson
