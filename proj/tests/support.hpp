#pragma once

// Test-side helpers: deterministic random elements and oracles that share no
// code with the library beyond the public data types.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "thompson/link_diagram.hpp"
#include "thompson/tree_pair.hpp"

namespace testing {

using thompson::BinaryTree;
using thompson::TreePair;

inline BinaryTree random_tree(std::mt19937& rng, std::size_t leaves) {
  if (leaves <= 1) return BinaryTree::leaf();
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, leaves - 1)(rng);
  return BinaryTree::node(random_tree(rng, k), random_tree(rng, leaves - k));
}

inline TreePair random_pair(std::mt19937& rng, std::size_t max_leaves, std::size_t min_leaves = 1) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(min_leaves, max_leaves)(rng);
  return TreePair(random_tree(rng, n), random_tree(rng, n));
}

// Reduced element with between min_leaves and max_leaves leaves.
inline TreePair random_reduced(std::mt19937& rng, std::size_t max_leaves, std::size_t min_leaves = 1) {
  while (true) {
    TreePair p = thompson::reduce(random_pair(rng, max_leaves, min_leaves));
    if (p.leaf_count() >= min_leaves) return p;
  }
}

// Points of [0,1] as exact fractions num / 2^kPrecision.
using Point = __int128;
inline constexpr int kPrecision = 100;
inline constexpr Point kOne = Point{1} << kPrecision;

// Standard dyadic subdivision of [0,1] by a tree: (start, depth) per leaf.
inline std::vector<std::pair<Point, int>> leaf_intervals(const BinaryTree& t) {
  std::vector<std::pair<Point, int>> out;
  std::function<void(const BinaryTree&, Point, int)> walk = [&](const BinaryTree& x, Point start, int depth) {
    if (x.is_leaf()) {
      out.push_back({start, depth});
      return;
    }
    walk(x.left(), start, depth + 1);
    walk(x.right(), start + (kOne >> (depth + 1)), depth + 1);
  };
  walk(t, 0, 0);
  return out;
}

// The piecewise-linear homeomorphism of [0,1] carrying leaf i of the source
// subdivision affinely onto leaf i of the target subdivision.
inline Point evaluate(const TreePair& p, Point x) {
  auto src = leaf_intervals(p.source());
  auto dst = leaf_intervals(p.target());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto [s, sd] = src[i];
    Point end = s + (kOne >> sd);
    if (x < s || (x >= end && i + 1 < src.size())) continue;
    auto [t, td] = dst[i];
    Point offset = x - s;
    offset = sd >= td ? offset << (sd - td) : offset >> (td - sd);
    return t + offset;
  }
  return x;
}

// All multiples of 2^-depth in [0,1].
inline std::vector<Point> sample_points(int depth) {
  std::vector<Point> pts;
  for (Point k = 0; k <= (Point{1} << depth); ++k) pts.push_back(k << (kPrecision - depth));
  return pts;
}

// Kauffman bracket by recursive skein expansion on the first crossing, with
// arc identifications tracked by relabelling. Independent of the library's
// bracket code; polynomial as exponent -> coefficient.
using Poly = std::map<int, long long>;

inline void add_into(Poly& a, const Poly& b, int shift, long long scale = 1) {
  for (auto [e, c] : b) {
    a[e + shift] += scale * c;
    if (a[e + shift] == 0) a.erase(e + shift);
  }
}

inline Poly times_delta(const Poly& p) {
  Poly out;
  add_into(out, p, 2, -1);
  add_into(out, p, -2, -1);
  return out;
}

// Bracket normalised so that a single closed loop with no crossings is 1.
inline Poly skein_bracket(const thompson::LinkDiagram& d) {
  // Arc identification through smoothings is a union-find over labels; each
  // recursion level decides one crossing.
  std::vector<std::array<int, 4>> xs;
  for (const auto& c : d.crossings()) xs.push_back(c.arcs);
  std::map<int, int> index;
  for (const auto& x : xs)
    for (int a : x) index.emplace(a, static_cast<int>(index.size()));
  const int n = static_cast<int>(index.size());
  std::function<Poly(std::size_t, std::vector<int>)> go = [&](std::size_t i, std::vector<int> parent) -> Poly {
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    if (i == xs.size()) {
      std::set<int> roots;
      for (int v = 0; v < n; ++v) roots.insert(find(v));
      Poly p{{0, 1}};
      for (std::size_t k = 1; k < roots.size(); ++k) p = times_delta(p);
      return p;
    }
    Poly total;
    for (int s = 0; s < 2; ++s) {
      std::vector<int> q = parent;
      std::function<int(int)> f = [&](int v) { return q[v] == v ? v : q[v] = f(q[v]); };
      auto join = [&](int a, int b) { q[f(index[xs[i][a]])] = f(index[xs[i][b]]); };
      if (s == 0) {
        join(0, 1);
        join(2, 3);
      } else {
        join(0, 3);
        join(1, 2);
      }
      add_into(total, go(i + 1, q), s == 0 ? 1 : -1);
    }
    return total;
  };
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  Poly p = xs.empty() ? Poly{{0, 1}} : go(0, parent);
  int loops = d.free_loops() - (xs.empty() ? 1 : 0);
  for (int k = 0; k < loops; ++k) p = times_delta(p);
  return p;
}

}  // namespace testing
