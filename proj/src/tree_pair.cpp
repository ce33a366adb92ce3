#include "thompson/tree_pair.hpp"

#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <vector>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

// Number of consecutive left edges climbing from `leaf` that stay off the
// right spine.
int leaf_exponent(const TreeLayout& t, int leaf) {
  int exponent = 0;
  int cur = t.leaf_nodes[leaf];
  while (true) {
    int p = t.nodes[cur].parent;
    if (p < 0 || t.nodes[p].left != cur || t.nodes[p].on_right_spine) break;
    ++exponent;
    cur = p;
  }
  return exponent;
}

std::vector<int> leaf_exponents(const BinaryTree& tree) {
  TreeLayout layout(tree);
  std::vector<int> out(layout.leaf_count());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = leaf_exponent(layout, static_cast<int>(k));
  return out;
}

}  // namespace

TreePair::TreePair(BinaryTree source, BinaryTree target) : source_(std::move(source)), target_(std::move(target)) {
  if (source_.leaf_count() != target_.leaf_count()) {
    throw InvalidDiagram("source has " + std::to_string(source_.leaf_count()) + " leaves, target has " +
                         std::to_string(target_.leaf_count()));
  }
}

bool TreePair::is_reduced() const {
  auto a = source_.caret_leaves();
  auto b = target_.caret_leaves();
  for (std::size_t i : a) {
    if (std::binary_search(b.begin(), b.end(), i)) return false;
  }
  return true;
}

TreePair make_generator(std::size_t i) {
  std::string source;
  for (std::size_t k = 0; k < i; ++k) source += "10";
  source += "11000";
  return TreePair(BinaryTree::from_bits(source), BinaryTree::right_comb(i + 3));
}

TreePair expand(const TreePair& p, std::size_t leaf_index) {
  if (leaf_index >= p.leaf_count()) {
    throw IndexError("leaf " + std::to_string(leaf_index) + " of a pair with " +
                     std::to_string(p.leaf_count()) + " leaves");
  }
  return TreePair(p.source().graft(leaf_index, BinaryTree::caret()),
                  p.target().graft(leaf_index, BinaryTree::caret()));
}

TreePair reduce(const TreePair& p) {
  BinaryTree source = p.source();
  BinaryTree target = p.target();
  bool changed = true;
  while (changed) {
    changed = false;
    auto a = source.caret_leaves();
    auto b = target.caret_leaves();
    for (std::size_t i : a) {
      if (std::binary_search(b.begin(), b.end(), i)) {
        source = source.collapse_caret(i);
        target = target.collapse_caret(i);
        changed = true;
        break;
      }
    }
  }
  return TreePair(std::move(source), std::move(target));
}

TreePair multiply(const TreePair& p, const TreePair& q) {
  BinaryTree middle = common_refinement(p.target(), q.source());
  auto p_subs = p.target().leaf_subtrees_in(middle);
  auto q_subs = q.source().leaf_subtrees_in(middle);
  return reduce(TreePair(p.source().graft_all(p_subs), q.target().graft_all(q_subs)));
}

TreePair invert(const TreePair& p) { return TreePair(p.target(), p.source()); }

bool equals(const TreePair& p, const TreePair& q) { return reduce(p) == reduce(q); }

TreePair from_word(const GeneratorWord& w) {
  TreePair result;
  for (const Factor& f : w.factors()) {
    TreePair g = make_generator(f.index);
    if (f.exponent < 0) g = invert(g);
    for (int k = 0; k < std::abs(f.exponent); ++k) result = multiply(result, g);
  }
  return result;
}

GeneratorWord to_word(const TreePair& p) {
  TreePair r = reduce(p);
  auto positive = leaf_exponents(r.source());
  auto negative = leaf_exponents(r.target());
  GeneratorWord word;
  for (std::size_t k = 0; k < positive.size(); ++k) {
    if (positive[k] != 0) word.append(Factor{k, positive[k]});
  }
  for (std::size_t k = negative.size(); k-- > 0;) {
    if (negative[k] != 0) word.append(Factor{k, -negative[k]});
  }
  return word;
}

bool is_positive(const TreePair& p) { return p.target().is_right_comb(); }

std::string to_json(const TreePair& p) {
  nlohmann::ordered_json j;
  j["source"] = p.source().bits();
  j["target"] = p.target().bits();
  return j.dump();
}

TreePair tree_pair_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree pair JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j["source"].is_string() ||
      !j["target"].is_string()) {
    throw ParseError("tree pair JSON needs string fields \"source\" and \"target\"");
  }
  return TreePair(BinaryTree::from_bits(j["source"].get<std::string>()),
                  BinaryTree::from_bits(j["target"].get<std::string>()));
}

}  // namespace thompson
