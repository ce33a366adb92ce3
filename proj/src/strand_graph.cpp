#include "thompson/strand_graph.hpp"

#include <map>
#include <queue>

#include "thompson/errors.hpp"

namespace thompson {

bool is_out_slot(VertexKind kind, int slot) {
  switch (kind) {
    case VertexKind::source:
      return true;
    case VertexKind::sink:
      return false;
    case VertexKind::split:
      return slot != 0;
    case VertexKind::merge:
      return slot == 2;
  }
  return false;
}

int slot_count(VertexKind kind) {
  return kind == VertexKind::split || kind == VertexKind::merge ? 3 : 1;
}

char kind_letter(VertexKind kind) {
  switch (kind) {
    case VertexKind::source:
      return 'T';
    case VertexKind::sink:
      return 'B';
    case VertexKind::split:
      return 'S';
    case VertexKind::merge:
      return 'M';
  }
  return '?';
}

int StrandGraph::add_vertex(VertexKind kind) {
  vertices_.push_back(Vertex{kind});
  return static_cast<int>(vertices_.size()) - 1;
}

int StrandGraph::add_edge(Port tail, Port head, int winding) {
  auto check = [&](Port p, bool out) {
    if (p.vertex < 0 || p.vertex >= static_cast<int>(vertices_.size())) throw InvalidDiagram("edge endpoint out of range");
    const Vertex& v = vertices_[p.vertex];
    if (p.slot < 0 || p.slot >= slot_count(v.kind) || is_out_slot(v.kind, p.slot) != out) {
      throw InvalidDiagram("edge endpoint uses a slot of the wrong direction");
    }
    if (v.edge[p.slot] >= 0) throw InvalidDiagram("slot already connected");
  };
  check(tail, true);
  check(head, false);
  int id = static_cast<int>(edges_.size());
  edges_.push_back(Edge{tail, head, winding});
  vertices_[tail.vertex].edge[tail.slot] = id;
  vertices_[head.vertex].edge[head.slot] = id;
  return id;
}

std::size_t StrandGraph::alive_vertex_count() const {
  std::size_t n = 0;
  for (const Vertex& v : vertices_) n += v.alive;
  return n;
}

std::vector<StrandGraph::Move> StrandGraph::find_moves() const {
  std::vector<Move> moves;
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    const Vertex& x = vertices_[v];
    if (!x.alive) continue;
    if (x.kind == VertexKind::split) {
      const Edge& l = edges_[x.edge[1]];
      const Edge& r = edges_[x.edge[2]];
      if (l.head.vertex == r.head.vertex && vertices_[l.head.vertex].kind == VertexKind::merge && l.head.slot == 0 &&
          r.head.slot == 1 && l.winding == r.winding) {
        moves.push_back({1, v, l.head.vertex});
      }
    } else if (x.kind == VertexKind::merge) {
      const Edge& out = edges_[x.edge[2]];
      if (vertices_[out.head.vertex].kind == VertexKind::split) moves.push_back({2, v, out.head.vertex});
    }
  }
  return moves;
}

StrandGraph::Outcome StrandGraph::apply(const Move& m) {
  if (m.type == 1) {
    const int s = m.first;
    const int g = m.second;
    const int l = vertices_[s].edge[1];
    const int r = vertices_[s].edge[2];
    Outcome o = splice({s, g}, {Through{{s, 0}, {g, 2}, edges_[l].winding}}, {l, r});
    o.right = o.left;
    return o;
  }
  if (m.type == 2) {
    const int g = m.first;
    const int s = m.second;
    const int mid = vertices_[g].edge[2];
    const int w = edges_[mid].winding;
    return splice({g, s}, {Through{{g, 0}, {s, 1}, w}, Through{{g, 1}, {s, 2}, w}}, {mid});
  }
  throw Error("unknown move type");
}

StrandGraph::Outcome StrandGraph::splice(const std::vector<int>& dead, const std::vector<Through>& through,
                                         const std::vector<int>& consumed) {
  std::vector<bool> is_dead(vertices_.size(), false);
  for (int v : dead) is_dead[v] = true;
  std::map<std::pair<int, int>, int> through_at;
  for (std::size_t k = 0; k < through.size(); ++k) {
    through_at[{through[k].in.vertex, through[k].in.slot}] = static_cast<int>(k);
  }
  for (int e : consumed) edges_[e].alive = false;

  std::vector<int> handle(through.size(), -1);
  std::vector<bool> handled(through.size(), false);
  std::vector<int> starts;
  for (int v : dead) {
    for (int s = 0; s < slot_count(vertices_[v].kind); ++s) {
      int e = vertices_[v].edge[s];
      if (!edges_[e].alive || is_out_slot(vertices_[v].kind, s)) continue;
      if (!is_dead[edges_[e].tail.vertex]) starts.push_back(e);
    }
  }
  Outcome outcome;
  std::vector<Edge> created;
  std::vector<std::vector<int>> created_through;
  for (int e : starts) {
    int winding = edges_[e].winding;
    Port p = edges_[e].head;
    edges_[e].alive = false;
    std::vector<int> passed;
    int last = e;
    while (true) {
      int k = through_at.at({p.vertex, p.slot});
      passed.push_back(k);
      winding += through[k].winding;
      last = edge_at(through[k].out);
      winding += edges_[last].winding;
      edges_[last].alive = false;
      if (!is_dead[edges_[last].head.vertex]) break;
      p = edges_[last].head;
    }
    created.push_back(Edge{edges_[e].tail, edges_[last].head, winding});
    created_through.push_back(std::move(passed));
  }
  for (std::size_t k = 0; k < through.size(); ++k) {
    bool on_chain = false;
    for (const auto& passed : created_through) {
      for (int j : passed) on_chain = on_chain || j == static_cast<int>(k);
    }
    if (on_chain || handled[k]) continue;
    int loop = outcome.loops_created++;
    int j = static_cast<int>(k);
    while (!handled[j]) {
      handled[j] = true;
      handle[j] = ~loop;
      int e = edge_at(through[j].out);
      edges_[e].alive = false;
      Port p = edges_[e].head;
      j = through_at.at({p.vertex, p.slot});
    }
  }
  for (int v : dead) {
    vertices_[v].alive = false;
    vertices_[v].edge = {-1, -1, -1};
  }
  for (std::size_t c = 0; c < created.size(); ++c) {
    const Edge& ne = created[c];
    int id = static_cast<int>(edges_.size());
    edges_.push_back(ne);
    vertices_[ne.tail.vertex].edge[ne.tail.slot] = id;
    vertices_[ne.head.vertex].edge[ne.head.slot] = id;
    for (int k : created_through[c]) handle[k] = id;
  }
  outcome.left = handle[0];
  outcome.right = handle.size() > 1 ? handle[1] : handle[0];
  return outcome;
}

std::vector<int> StrandGraph::component_of(int v) const {
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<int> out;
  std::queue<int> todo;
  todo.push(v);
  seen[v] = true;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    out.push_back(u);
    for (int s = 0; s < slot_count(vertices_[u].kind); ++s) {
      const Edge& e = edges_[vertices_[u].edge[s]];
      int w = is_out_slot(vertices_[u].kind, s) ? e.head.vertex : e.tail.vertex;
      if (!seen[w]) {
        seen[w] = true;
        todo.push(w);
      }
    }
  }
  return out;
}

bool StrandGraph::windings_positive() const {
  // A cycle of length L <= V and winding W has weight (V+1)W - L under the
  // weights below, which is negative exactly when W <= 0.
  const long long scale = static_cast<long long>(vertices_.size()) + 1;
  std::vector<long long> dist(vertices_.size(), 0);
  for (std::size_t round = 0; round <= vertices_.size(); ++round) {
    bool changed = false;
    for (const Edge& e : edges_) {
      if (!e.alive) continue;
      long long w = scale * e.winding - 1;
      if (dist[e.tail.vertex] + w < dist[e.head.vertex]) {
        dist[e.head.vertex] = dist[e.tail.vertex] + w;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

StrandGraph StrandGraph::compacted(std::vector<int>* old_to_new) const {
  std::vector<int> map(vertices_.size(), -1);
  StrandGraph out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive) map[v] = out.add_vertex(vertices_[v].kind);
  }
  for (const Edge& e : edges_) {
    if (!e.alive) continue;
    out.add_edge({map[e.tail.vertex], e.tail.slot}, {map[e.head.vertex], e.head.slot}, e.winding);
  }
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

}  // namespace thompson
