#include "thompson/annular_diagram.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include <json.hpp>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

std::string kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::split:
      return "split";
    case VertexKind::merge:
      return "merge";
    case VertexKind::source:
      return "source";
    case VertexKind::sink:
      return "sink";
  }
  return "";
}

VertexKind kind_from_name(const std::string& s) {
  if (s == "split") return VertexKind::split;
  if (s == "merge") return VertexKind::merge;
  throw ParseError("annular diagram vertex kind '" + s + "'");
}

bool contains(const std::vector<int>& set, int v) { return std::find(set.begin(), set.end(), v) != set.end(); }

std::string component_code(const StrandGraph& g, int start) {
  std::map<int, int> label;
  std::map<int, long long> potential;
  std::vector<int> order;
  std::queue<int> todo;
  label[start] = 0;
  potential[start] = 0;
  order.push_back(start);
  todo.push(start);
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    const auto& x = g.vertex(u);
    for (int s = 0; s < 3; ++s) {
      const auto& e = g.edge(x.edge[s]);
      bool out = is_out_slot(x.kind, s);
      int w = out ? e.head.vertex : e.tail.vertex;
      if (label.count(w)) continue;
      label[w] = static_cast<int>(order.size());
      potential[w] = out ? potential[u] - e.winding : potential[u] + e.winding;
      order.push_back(w);
      todo.push(w);
    }
  }
  std::string code;
  for (int u : order) {
    const auto& x = g.vertex(u);
    if (!code.empty()) code += ' ';
    code += kind_letter(x.kind);
    for (int s = 0; s < 3; ++s) {
      const auto& e = g.edge(x.edge[s]);
      if (is_out_slot(x.kind, s)) {
        long long w = e.winding + potential[e.head.vertex] - potential[u];
        code += '>' + std::to_string(label[e.head.vertex]) + '.' + std::to_string(e.head.slot) + 'w' + std::to_string(w);
      } else {
        code += '<' + std::to_string(label[e.tail.vertex]) + '.' + std::to_string(e.tail.slot);
      }
    }
  }
  return code;
}

}  // namespace

AnnularStrandDiagram::AnnularStrandDiagram(StrandGraph graph, std::vector<Layer> layers)
    : graph_(std::move(graph)), layers_(std::move(layers)) {
  std::vector<int> owner(graph_.vertices().size(), -1);
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i].free_loop) continue;
    int v = layers_[i].vertex;
    if (v < 0 || v >= static_cast<int>(owner.size()) || !graph_.vertex(v).alive) {
      throw InvalidDiagram("annular layer refers to a missing vertex");
    }
    for (int u : graph_.component_of(v)) {
      if (owner[u] >= 0) throw InvalidDiagram("two annular layers share a component");
      owner[u] = static_cast<int>(i);
    }
  }
  for (std::size_t v = 0; v < owner.size(); ++v) {
    const auto& x = graph_.vertex(static_cast<int>(v));
    if (!x.alive) continue;
    if (x.kind != VertexKind::split && x.kind != VertexKind::merge) {
      throw InvalidDiagram("annular diagrams have only splits and merges");
    }
    if (owner[v] < 0) throw InvalidDiagram("component missing from the radial order");
  }
}

int AnnularStrandDiagram::free_loops() const {
  return static_cast<int>(std::count_if(layers_.begin(), layers_.end(), [](const Layer& l) { return l.free_loop; }));
}

std::string AnnularStrandDiagram::to_json() const {
  std::vector<int> map;
  StrandGraph g = graph_.compacted(&map);
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) {
    j["vertices"].push_back({{"kind", kind_name(v.kind)}, {"edges", v.edge}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"tail", {e.tail.vertex, e.tail.slot}}, {"head", {e.head.vertex, e.head.slot}}, {"winding", e.winding}});
  }
  j["layers"] = nlohmann::ordered_json::array();
  for (const Layer& l : layers_) {
    if (l.free_loop) {
      j["layers"].push_back("loop");
    } else {
      j["layers"].push_back(map[l.vertex]);
    }
  }
  j["free_loops"] = free_loops();
  return j.dump();
}

AnnularStrandDiagram AnnularStrandDiagram::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    StrandGraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(kind_from_name(v.at("kind").get<std::string>()));
    for (const auto& e : j.at("edges")) {
      g.add_edge({e.at("tail").at(0).get<int>(), e.at("tail").at(1).get<int>()},
                 {e.at("head").at(0).get<int>(), e.at("head").at(1).get<int>()}, e.at("winding").get<int>());
    }
    for (const auto& v : g.vertices()) {
      for (int s = 0; s < slot_count(v.kind); ++s) {
        if (v.edge[s] < 0) throw InvalidDiagram("unconnected slot");
      }
    }
    std::vector<Layer> layers;
    for (const auto& l : j.at("layers")) {
      if (l.is_string()) {
        if (l.get<std::string>() != "loop") throw ParseError("annular layer '" + l.get<std::string>() + "'");
        layers.push_back({true, -1});
      } else {
        layers.push_back({false, l.get<int>()});
      }
    }
    return AnnularStrandDiagram(std::move(g), std::move(layers));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("annular diagram JSON: ") + e.what());
  }
}

AnnularStrandDiagram annular_closure(const StrandDiagram& s) {
  const StrandGraph& g = s.graph();
  const auto& top = g.edge(g.vertex(s.source()).edge[0]);
  const auto& bottom = g.edge(g.vertex(s.sink()).edge[0]);
  if (top.head.vertex == s.sink()) return AnnularStrandDiagram(StrandGraph{}, {{true, -1}});
  StrandGraph out;
  std::vector<int> map(g.vertices().size(), -1);
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& x = g.vertex(static_cast<int>(v));
    if (x.alive && (x.kind == VertexKind::split || x.kind == VertexKind::merge)) {
      map[v] = out.add_vertex(x.kind);
    }
  }
  for (const auto& e : g.edges()) {
    if (!e.alive || map[e.tail.vertex] < 0 || map[e.head.vertex] < 0) continue;
    out.add_edge({map[e.tail.vertex], e.tail.slot}, {map[e.head.vertex], e.head.slot}, e.winding);
  }
  out.add_edge({map[bottom.tail.vertex], bottom.tail.slot}, {map[top.head.vertex], top.head.slot},
               bottom.winding + top.winding + 1);
  return AnnularStrandDiagram(std::move(out), {{false, 0}});
}

AnnularStrandDiagram reduce_annular(const AnnularStrandDiagram& a, std::optional<std::uint64_t> seed) {
  using Layer = AnnularStrandDiagram::Layer;
  StrandGraph g = a.graph_;
  std::vector<Layer> layers = a.layers_;
  std::mt19937_64 rng(seed.value_or(0));
  while (true) {
    auto moves = g.find_moves();
    std::vector<std::size_t> loop_pairs;
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
      if (layers[i].free_loop && layers[i + 1].free_loop) loop_pairs.push_back(i);
    }
    const std::size_t total = moves.size() + loop_pairs.size();
    if (total == 0) break;
    std::size_t pick = seed ? std::uniform_int_distribution<std::size_t>(0, total - 1)(rng) : 0;
    if (pick >= moves.size()) {
      layers.erase(layers.begin() + static_cast<std::ptrdiff_t>(loop_pairs[pick - moves.size()] + 1));
      continue;
    }
    const auto& move = moves[pick];
    const std::vector<int> before = g.component_of(move.first);
    auto k = std::find_if(layers.begin(), layers.end(), [&](const Layer& l) { return !l.free_loop && contains(before, l.vertex); });
    if (k == layers.end()) throw InvalidDiagram("component missing from the radial order");
    auto outcome = g.apply(move);
    auto piece = [&](int handle) { return handle < 0 ? Layer{true, -1} : Layer{false, g.edge(handle).tail.vertex}; };
    Layer left = piece(outcome.left);
    Layer right = piece(outcome.right);
    bool same = outcome.left == outcome.right;
    if (!same && !left.free_loop && !right.free_loop) same = contains(g.component_of(left.vertex), right.vertex);
    *k = left;
    if (!same) layers.insert(k + 1, right);
  }
  std::vector<int> map;
  StrandGraph compact = g.compacted(&map);
  for (Layer& l : layers) {
    if (!l.free_loop) l.vertex = map[l.vertex];
  }
  return AnnularStrandDiagram(std::move(compact), std::move(layers));
}

AnnularStrandDiagram reduced_annular(const TreePair& p) { return reduce_annular(annular_closure(strand_from_pair(p))); }

std::string CanonicalCode::to_string() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " | ";
    out += c;
  }
  return out.empty() ? "empty" : out;
}

CanonicalCode canonical_code(const AnnularStrandDiagram& a) {
  CanonicalCode code;
  const StrandGraph& g = a.graph();
  for (const auto& layer : a.layers()) {
    if (layer.free_loop) {
      code.components.push_back("O");
      continue;
    }
    std::string best;
    for (int v : g.component_of(layer.vertex)) {
      std::string c = component_code(g, v);
      if (best.empty() || c < best) best = std::move(c);
    }
    code.components.push_back(std::move(best));
  }
  return code;
}

std::size_t component_count(const AnnularStrandDiagram& a) { return a.layers().size(); }

bool are_conjugate(const TreePair& g, const TreePair& h) {
  return canonical_code(reduced_annular(g)) == canonical_code(reduced_annular(h));
}

}  // namespace thompson
