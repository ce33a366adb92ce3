#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thompson/strand_diagram.hpp"
#include "thompson/strand_graph.hpp"
#include "thompson/tree_pair.hpp"

namespace thompson {

// Annular strand diagram: splits and merges in the annulus plus free loops.
// Every component winds around the hole, so the components are nested; they
// are kept in radial order from the inner boundary outwards. Left outputs
// and inputs face the inner boundary.
class AnnularStrandDiagram {
 public:
  struct Layer {
    bool free_loop = false;
    int vertex = -1;  // any vertex of the component (unused for a free loop)
    friend bool operator==(const Layer&, const Layer&) = default;
  };

  AnnularStrandDiagram(StrandGraph graph, std::vector<Layer> layers);

  const StrandGraph& graph() const { return graph_; }
  const std::vector<Layer>& layers() const { return layers_; }
  int free_loops() const;
  std::size_t vertex_count() const { return graph_.alive_vertex_count(); }
  // Every directed cycle has positive winding around the hole.
  bool windings_valid() const { return graph_.windings_positive(); }

  std::string to_json() const;
  static AnnularStrandDiagram from_json(const std::string& text);

 private:
  friend AnnularStrandDiagram reduce_annular(const AnnularStrandDiagram&, std::optional<std::uint64_t>);
  StrandGraph graph_;
  std::vector<Layer> layers_;
};

// Identifies the top and bottom of the square: the edges at the source and the
// sink become one edge crossing the cut once.
AnnularStrandDiagram annular_closure(const StrandDiagram& s);

// Type I (bigon bounding a disk), type II (merge followed by split) and type
// III (adjacent free loops) moves until none applies. With a seed the next
// move is drawn at random from all applicable ones.
AnnularStrandDiagram reduce_annular(const AnnularStrandDiagram& a, std::optional<std::uint64_t> seed = std::nullopt);

// reduce_annular(annular_closure(strand_from_pair(p))).
AnnularStrandDiagram reduced_annular(const TreePair& p);

// One entry per component in radial order: "O" for a free loop, otherwise the
// least BFS encoding over all start vertices, with windings normalised along
// the BFS tree.
struct CanonicalCode {
  std::vector<std::string> components;
  std::string to_string() const;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const AnnularStrandDiagram& a);

std::size_t component_count(const AnnularStrandDiagram& a);

bool are_conjugate(const TreePair& g, const TreePair& h);

}  // namespace thompson
