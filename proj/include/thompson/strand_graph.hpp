#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace thompson {

enum class VertexKind { source, sink, split, merge };

// Slot numbering per vertex kind:
//   split:  0 = in, 1 = left out, 2 = right out
//   merge:  0 = left in, 1 = right in, 2 = out
//   source: 0 = out;   sink: 0 = in
bool is_out_slot(VertexKind kind, int slot);
int slot_count(VertexKind kind);
char kind_letter(VertexKind kind);

struct Port {
  int vertex = -1;
  int slot = -1;
  friend bool operator==(const Port&, const Port&) = default;
};

// Mutable embedded directed graph shared by strand and annular diagrams.
// Every edge carries a winding: the signed number of times it crosses a
// fixed radial cut (always 0 for diagrams in the square).
class StrandGraph {
 public:
  struct Vertex {
    VertexKind kind{};
    std::array<int, 3> edge{-1, -1, -1};
    bool alive = true;
  };
  struct Edge {
    Port tail;
    Port head;
    int winding = 0;
    bool alive = true;
  };

  // A move found by find_moves(): type I removes a split/merge bigon, type II
  // a merge whose output feeds a split.
  struct Move {
    int type = 0;
    int first = -1;   // split (type I) or merge (type II)
    int second = -1;  // merge (type I) or split (type II)
  };

  // Outcome of a move: where the strand(s) through the removed pair ended up.
  // A handle is an edge id, or ~k for the k-th free loop created.
  struct Outcome {
    int left = -1;
    int right = -1;
    int loops_created = 0;
  };

  int add_vertex(VertexKind kind);
  int add_edge(Port tail, Port head, int winding = 0);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  int edge_at(Port p) const { return vertices_[p.vertex].edge[p.slot]; }
  std::size_t alive_vertex_count() const;

  std::vector<Move> find_moves() const;
  Outcome apply(const Move& m);

  // Alive vertices reachable from v ignoring edge direction.
  std::vector<int> component_of(int v) const;
  // Every directed cycle has positive total winding.
  bool windings_positive() const;

  // Copy with dead vertices and edges dropped and ids renumbered in order.
  // old_to_new receives the vertex renumbering (-1 for dead vertices).
  StrandGraph compacted(std::vector<int>* old_to_new = nullptr) const;

 private:
  struct Through {
    Port in;   // in-port of a removed vertex
    Port out;  // out-port the strand continues from
    int winding = 0;
  };
  Outcome splice(const std::vector<int>& dead, const std::vector<Through>& through, const std::vector<int>& consumed);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

}  // namespace thompson
