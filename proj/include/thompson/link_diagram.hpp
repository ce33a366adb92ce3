#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

// One crossing of a planar diagram code: four arc labels read
// counterclockwise starting from the incoming under-strand. Positions 0 and 2
// are the under-strand, 1 and 3 the over-strand.
struct Crossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Unoriented link diagram as a PD code plus a count of crossing-free circle
// components. Every arc label occurs exactly twice across the crossings.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<Crossing> crossings, int free_loops);

  static LinkDiagram unknot() { return LinkDiagram({}, 1); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }

  // Number of link components, free loops included.
  int component_count() const;
  // Over- and under-strands exchanged at every crossing.
  LinkDiagram mirror() const;
  // Relabel arcs 1..2c along component orientations (deterministic).
  LinkDiagram normalized() const;
  // Traversal alternates over and under along every component.
  bool is_alternating() const;

  // Lines "X(a,b,c,d)" followed by one line "O k".
  std::string to_pd() const;
  static LinkDiagram from_pd(std::string_view text);

  friend LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

// Assembles a diagram from crossings whose four ports are given in
// counterclockwise order and wired together pairwise. Orientation and arc
// labels are assigned by tracing the components in build().
class DiagramBuilder {
 public:
  struct Port {
    int crossing;
    int slot;  // 0..3, counterclockwise
  };

  // under_on_even: the under-strand occupies ports 0 and 2 (otherwise 1 and 3).
  int add_crossing(bool under_on_even);
  void connect(Port a, Port b);
  void add_free_loops(int k) { free_loops_ += k; }

  // Throws InvalidDiagram if some port is left unconnected.
  LinkDiagram build() const;

 private:
  std::vector<bool> under_on_even_;
  std::vector<std::array<int, 4>> partner_;  // flattened port index of the other end, -1 if open
  int free_loops_ = 0;
};

}  // namespace thompson
