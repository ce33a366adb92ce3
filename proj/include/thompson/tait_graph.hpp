#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace thompson {

enum class Half { upper, lower };
enum class Sign { positive, negative };

struct TaitEdge {
  int left = 0;
  int right = 0;
  Half half = Half::upper;
  Sign sign = Sign::positive;
  friend bool operator==(const TaitEdge&, const TaitEdge&) = default;
};

// Signed planar graph on vertices v_0..v_{n-1} placed on a line. Upper edges
// are drawn as arcs above the line and carry sign +, lower edges below with
// sign -. Within a half, edge intervals are nested or disjoint.
class TaitGraph {
 public:
  TaitGraph() = default;
  TaitGraph(int vertex_count, std::vector<TaitEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<TaitEdge>& edges() const { return edges_; }
  std::size_t count(Half h) const;

  // Throws InvalidDiagram describing the first violated invariant.
  void validate() const;

  // {"n": int, "edges": [[l, r, "U"|"L", "+"|"-"], ...]}
  std::string to_json() const;
  static TaitGraph from_json(const std::string& text);

  friend bool operator==(const TaitGraph&, const TaitGraph&) = default;

 private:
  int vertex_count_ = 1;
  std::vector<TaitEdge> edges_;
};

}  // namespace thompson
