#pragma once

#include <cstddef>
#include <string>

#include "thompson/binary_tree.hpp"
#include "thompson/generator_word.hpp"

namespace thompson {

// A tree diagram (source T+, target T-) representing an element of
// Thompson's group F. Any pair with equal leaf counts is accepted; reduce()
// yields the unique reduced representative of the equivalence class.
//
// Products are read left to right: in p * q the target tree of p is glued to
// the source tree of q.
class TreePair {
 public:
  TreePair() = default;  // identity, one leaf in each tree
  TreePair(BinaryTree source, BinaryTree target);

  static TreePair identity() { return TreePair(); }

  const BinaryTree& source() const { return source_; }
  const BinaryTree& target() const { return target_; }
  std::size_t leaf_count() const { return source_.leaf_count(); }

  bool is_reduced() const;
  bool is_identity() const { return source_.is_leaf() && target_.is_leaf(); }

  friend bool operator==(const TreePair&, const TreePair&) = default;
  friend auto operator<=>(const TreePair&, const TreePair&) = default;

 private:
  BinaryTree source_;
  BinaryTree target_;
};

// x_i: source is a right vine of i carets ending in ((••)•), target the right
// comb with i+3 leaves.
TreePair make_generator(std::size_t i);

TreePair expand(const TreePair& p, std::size_t leaf_index);
TreePair reduce(const TreePair& p);
TreePair multiply(const TreePair& p, const TreePair& q);
TreePair invert(const TreePair& p);
bool equals(const TreePair& p, const TreePair& q);

TreePair from_word(const GeneratorWord& w);
// Normal form P N^-1 with P = x_0^a0 x_1^a1 ... read from the source tree's
// leaf exponents and N likewise from the target tree.
GeneratorWord to_word(const TreePair& p);

// Target tree is the right comb. Meaningful on reduced pairs.
bool is_positive(const TreePair& p);

inline TreePair operator*(const TreePair& p, const TreePair& q) { return multiply(p, q); }

// {"source": "<bits>", "target": "<bits>"}
std::string to_json(const TreePair& p);
TreePair tree_pair_from_json(const std::string& text);

}  // namespace thompson
