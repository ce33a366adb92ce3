#pragma once

#include <cstddef>
#include <vector>

#include "thompson/tree_pair.hpp"

namespace thompson {

// a = x_0^3 x_2^-1 x_0^-3, reduced.
TreePair element_a();

// (H+, H-): source(p) grafted onto the leftmost leaf of a's source tree and
// target(p) onto the leftmost leaf of a's target tree. Adds four leaves.
TreePair attach_a(const TreePair& p);

struct HSequence {
  TreePair seed;
  std::vector<TreePair> elements;  // h_1 = seed, h_{i+1} = attach_a(h_i)
};

HSequence h_sequence(const TreePair& seed, std::size_t n);

// T_0 is a caret; T_n grafts ((..).) onto the rightmost leaf of T_{n-1}.
BinaryTree tree_T(std::size_t n);
// S_n: T_n hung from the right leaf of a caret.
BinaryTree tree_S(std::size_t n);

// (T_n, right comb).
TreePair g_element(std::size_t n);
// (S_n, right comb).
TreePair h_element(std::size_t n);

// reduce(g x g^-1).
TreePair conjugate(const TreePair& g, const TreePair& x);

// For positive g: (source(g) with a caret on its leftmost leaf, source(g)
// with a caret on its rightmost leaf), which is g x_0 g^-1.
TreePair conjugate_x0_positive(const TreePair& g);
// For positive g: carets on the second leaf and on the rightmost leaf; this
// is g x_1 g^-1.
TreePair conjugate_x1_positive(const TreePair& g);

}  // namespace thompson
