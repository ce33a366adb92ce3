#include "thompson/binary_tree.hpp"

#include "thompson/errors.hpp"

namespace thompson {
namespace {

// One past the end of the subtree starting at `pos`.
std::size_t subtree_end(const std::string& bits, std::size_t pos) {
  std::size_t need = 1;
  while (need > 0) {
    need += bits[pos++] == '1' ? 1 : -1;
  }
  return pos;
}

// Position in `bits` of the k-th leaf character.
std::size_t leaf_position(const std::string& bits, std::size_t k) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '0' && k-- == 0) return i;
  }
  throw IndexError("leaf " + std::to_string(k));
}

void append_refinement(const std::string& a, std::size_t& ia, const std::string& b, std::size_t& ib,
                       std::string& out) {
  if (a[ia] == '0') {
    std::size_t end = subtree_end(b, ib);
    out.append(b, ib, end - ib);
    ib = end;
    ++ia;
    return;
  }
  if (b[ib] == '0') {
    std::size_t end = subtree_end(a, ia);
    out.append(a, ia, end - ia);
    ia = end;
    ++ib;
    return;
  }
  out.push_back('1');
  ++ia;
  ++ib;
  append_refinement(a, ia, b, ib, out);
  append_refinement(a, ia, b, ib, out);
}

void collect_leaf_subtrees(const std::string& coarse, std::size_t& ic, const std::string& fine,
                           std::size_t& jf, std::vector<BinaryTree>& out) {
  if (coarse[ic] == '0') {
    std::size_t end = subtree_end(fine, jf);
    out.push_back(BinaryTree::from_bits(std::string_view(fine).substr(jf, end - jf)));
    jf = end;
    ++ic;
    return;
  }
  if (fine[jf] != '1') throw InvalidDiagram("tree is not a refinement");
  ++ic;
  ++jf;
  collect_leaf_subtrees(coarse, ic, fine, jf, out);
  collect_leaf_subtrees(coarse, ic, fine, jf, out);
}

}  // namespace

BinaryTree::BinaryTree() : bits_("0") {}

BinaryTree BinaryTree::leaf() { return BinaryTree(); }

BinaryTree BinaryTree::caret() { return BinaryTree(std::string("100")); }

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  return BinaryTree("1" + left.bits_ + right.bits_);
}

BinaryTree BinaryTree::right_comb(std::size_t leaves) {
  if (leaves == 0) throw IndexError("a tree has at least one leaf");
  std::string bits;
  for (std::size_t i = 1; i < leaves; ++i) bits += "10";
  bits += '0';
  return BinaryTree(std::move(bits));
}

BinaryTree BinaryTree::from_bits(std::string_view bits) {
  std::size_t need = 1;
  std::size_t i = 0;
  for (; i < bits.size() && need > 0; ++i) {
    if (bits[i] == '1') {
      ++need;
    } else if (bits[i] == '0') {
      --need;
    } else {
      throw ParseError("tree bitstring may only contain '0' and '1': \"" + std::string(bits) + "\"");
    }
  }
  if (need != 0 || i != bits.size()) {
    throw ParseError("not a complete preorder tree encoding: \"" + std::string(bits) + "\"");
  }
  return BinaryTree(std::string(bits));
}

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw InvalidDiagram("a leaf has no children");
  return BinaryTree(bits_.substr(1, subtree_end(bits_, 1) - 1));
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw InvalidDiagram("a leaf has no children");
  return BinaryTree(bits_.substr(subtree_end(bits_, 1)));
}

bool BinaryTree::is_right_comb() const {
  for (std::size_t i = 0; i + 1 < bits_.size(); i += 2) {
    if (bits_[i] != '1' || bits_[i + 1] != '0') return false;
  }
  return bits_.back() == '0';
}

BinaryTree BinaryTree::graft(std::size_t leaf_index, const BinaryTree& subtree) const {
  if (leaf_index >= leaf_count()) {
    throw IndexError("leaf " + std::to_string(leaf_index) + " of a tree with " +
                     std::to_string(leaf_count()) + " leaves");
  }
  std::string out = bits_;
  out.replace(leaf_position(bits_, leaf_index), 1, subtree.bits_);
  return BinaryTree(std::move(out));
}

BinaryTree BinaryTree::graft_all(std::span<const BinaryTree> subtrees) const {
  if (subtrees.size() != leaf_count()) throw InvalidDiagram("graft_all needs one subtree per leaf");
  std::string out;
  std::size_t k = 0;
  for (char c : bits_) {
    if (c == '1') {
      out.push_back('1');
    } else {
      out += subtrees[k++].bits_;
    }
  }
  return BinaryTree(std::move(out));
}

std::vector<std::size_t> BinaryTree::caret_leaves() const {
  // A caret is exactly a "100" run in preorder.
  std::vector<std::size_t> result;
  std::size_t leaf = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] == '0') {
      ++leaf;
    } else if (i + 2 < bits_.size() && bits_[i + 1] == '0' && bits_[i + 2] == '0') {
      result.push_back(leaf);
    }
  }
  return result;
}

BinaryTree BinaryTree::collapse_caret(std::size_t i) const {
  std::size_t pos = leaf_position(bits_, i);
  if (pos == 0 || bits_[pos - 1] != '1' || pos + 1 >= bits_.size() || bits_[pos + 1] != '0') {
    throw InvalidDiagram("leaves " + std::to_string(i) + ", " + std::to_string(i + 1) +
                         " do not form a caret");
  }
  std::string out = bits_;
  out.replace(pos - 1, 3, "0");
  return BinaryTree(std::move(out));
}

std::vector<BinaryTree> BinaryTree::leaf_subtrees_in(const BinaryTree& fine) const {
  std::vector<BinaryTree> out;
  out.reserve(leaf_count());
  std::size_t ic = 0;
  std::size_t jf = 0;
  collect_leaf_subtrees(bits_, ic, fine.bits_, jf, out);
  return out;
}

BinaryTree common_refinement(const BinaryTree& a, const BinaryTree& b) {
  std::string out;
  std::size_t ia = 0;
  std::size_t ib = 0;
  append_refinement(a.bits_, ia, b.bits_, ib, out);
  return BinaryTree(std::move(out));
}

TreeLayout::TreeLayout(const BinaryTree& tree) {
  const std::string& bits = tree.bits();
  nodes.resize(bits.size());
  // Preorder walk with an explicit stack of nodes still waiting for a child.
  std::vector<int> pending;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    int id = static_cast<int>(i);
    if (!pending.empty()) {
      int p = pending.back();
      nodes[i].parent = p;
      if (nodes[p].left < 0) {
        nodes[p].left = id;
      } else {
        nodes[p].right = id;
        pending.pop_back();
      }
    }
    if (bits[i] == '1') {
      // Mark as internal; real child ids are filled in as they appear.
      nodes[i].left = -1;
      pending.push_back(id);
      nodes[i].leaf_index = -2;
    } else {
      nodes[i].leaf_index = static_cast<int>(leaf_nodes.size());
      nodes[i].first_leaf = nodes[i].last_leaf = nodes[i].leaf_index;
      leaf_nodes.push_back(id);
    }
  }
  for (auto& n : nodes) {
    if (n.leaf_index == -2) n.leaf_index = -1;
  }
  for (std::size_t i = bits.size(); i-- > 0;) {
    Node& n = nodes[i];
    if (!n.is_leaf()) {
      n.first_leaf = nodes[n.left].first_leaf;
      n.last_leaf = nodes[n.right].last_leaf;
    }
  }
  for (int v = 0; v >= 0; v = nodes[v].right) {
    nodes[v].on_right_spine = true;
    if (nodes[v].is_leaf()) break;
  }
}

}  // namespace thompson
