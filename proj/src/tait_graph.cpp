#include "thompson/tait_graph.hpp"

#include <json.hpp>

#include "thompson/errors.hpp"

namespace thompson {

TaitGraph::TaitGraph(int vertex_count, std::vector<TaitEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {}

std::size_t TaitGraph::count(Half h) const {
  std::size_t n = 0;
  for (const TaitEdge& e : edges_) n += e.half == h;
  return n;
}

void TaitGraph::validate() const {
  if (vertex_count_ < 1) throw InvalidDiagram("Tait graph needs at least one vertex");
  for (const TaitEdge& e : edges_) {
    if (e.left < 0 || e.right >= vertex_count_ || e.left >= e.right) {
      throw InvalidDiagram("edge (" + std::to_string(e.left) + "," + std::to_string(e.right) +
                           ") is not an increasing pair of vertices");
    }
    if ((e.half == Half::upper) != (e.sign == Sign::positive)) {
      throw InvalidDiagram("upper edges must be positive and lower edges negative");
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const TaitEdge& a = edges_[i];
      const TaitEdge& b = edges_[j];
      if (a.half != b.half) continue;
      if (a.left == b.left && a.right == b.right) throw InvalidDiagram("parallel edges in one half");
      bool overlap = (a.left < b.left && b.left < a.right && a.right < b.right) ||
                     (b.left < a.left && a.left < b.right && b.right < a.right);
      if (overlap) {
        throw InvalidDiagram("edges (" + std::to_string(a.left) + "," + std::to_string(a.right) + ") and (" +
                             std::to_string(b.left) + "," + std::to_string(b.right) + ") overlap");
      }
    }
  }
}

std::string TaitGraph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = vertex_count_;
  j["edges"] = nlohmann::json::array();
  for (const TaitEdge& e : edges_) {
    j["edges"].push_back({e.left, e.right, e.half == Half::upper ? "U" : "L",
                          e.sign == Sign::positive ? "+" : "-"});
  }
  return j.dump();
}

TaitGraph TaitGraph::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<TaitEdge> edges;
    for (const auto& e : j.at("edges")) {
      TaitEdge t;
      t.left = e.at(0).get<int>();
      t.right = e.at(1).get<int>();
      auto half = e.at(2).get<std::string>();
      auto sign = e.at(3).get<std::string>();
      if ((half != "U" && half != "L") || (sign != "+" && sign != "-")) throw ParseError("Tait edge tags");
      t.half = half == "U" ? Half::upper : Half::lower;
      t.sign = sign == "+" ? Sign::positive : Sign::negative;
      edges.push_back(t);
    }
    return TaitGraph(j.at("n").get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Tait graph JSON: ") + e.what());
  }
}

}  // namespace thompson
