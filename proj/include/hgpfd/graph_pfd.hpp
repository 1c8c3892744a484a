#ifndef HGPFD_GRAPH_PFD_HPP
#define HGPFD_GRAPH_PFD_HPP

#include <string>
#include <variant>
#include <vector>

#include "hgpfd/coordinates.hpp"
#include "hgpfd/graph.hpp"

namespace hgpfd {

/// Total edge coloring; colors index factors of a product representation.
/// `colors` is parallel to UndirectedGraph::edges.
struct EdgeColoring {
  int color_count = 0;
  std::vector<int> colors;

  int color_of(const UndirectedGraph& g, int u, int v) const {
    return colors[static_cast<std::size_t>(g.edge_index(u, v))];
  }
};

/// Why a coloring failed to produce a coordinatization.
struct ColoringDiagnostic {
  enum class Kind {
    // removing the edge's own color class leaves its endpoints connected,
    // so the edge cannot change any coordinate
    edge_not_separated,
    // two distinct vertices received the same coordinate vector
    coordinate_clash,
    // the map is injective but the grid is not fully covered
    grid_incomplete,
  };
  Kind kind;
  int u = -1;
  int v = -1;
  int color = -1;

  std::string describe() const;
};

/// Breadth-first coordinate assignment for a candidate product coloring.
/// The root (vertex 0) gets the all-ones vector (all zeros internally);
/// traversing an edge of color c changes exactly coordinate c; the value of
/// coordinate c is the index of the vertex's component once the color-c
/// edges are removed, numbered by first touch in a BFS from the root.
/// Returns the coordinatization, or a deterministic diagnostic saying which
/// check failed first.
std::variant<Coordinatization, ColoringDiagnostic> coordinates_from_coloring(
    const UndirectedGraph& g, const EdgeColoring& coloring);

struct GraphPfd {
  std::vector<UndirectedGraph> factors;  // prime; vertex ids are coordinate values
  Coordinatization coords;
  EdgeColoring coloring;                 // color i marks the edges of factor i
};

/// Prime factor decomposition of a connected graph under the Cartesian
/// product. Edge classes come from a square-property refinement (triangles
/// and opposite edges of chordless squares force equal colors; adjacent
/// edges sharing zero or several chordless squares force a merge), closed
/// transitively and then repaired against coordinates_from_coloring until
/// the classes form a product relation. Factors are sorted by
/// (vertex count, edge count, canonical edge list).
GraphPfd pfd_graph(const UndirectedGraph& g);

}  // namespace hgpfd

#endif  // HGPFD_GRAPH_PFD_HPP
