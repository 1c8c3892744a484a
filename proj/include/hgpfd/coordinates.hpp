#ifndef HGPFD_COORDINATES_HPP
#define HGPFD_COORDINATES_HPP

#include <optional>
#include <span>
#include <vector>

#include "hgpfd/hypergraph.hpp"

namespace hgpfd {

/// A bijection between a vertex set and the full grid
/// {0..l_1-1} x ... x {0..l_k-1}. Coordinate values are 0-based internally;
/// file output shows them 1-based. The trivial k = 0 case covers K1 only.
class Coordinatization {
 public:
  Coordinatization() = default;

  /// Validates sizes (each >= 2, product == n) and bijectivity.
  Coordinatization(int n, std::vector<int> sizes, std::vector<std::vector<int>> coords);

  static Coordinatization trivial_k1();

  int vertex_count() const { return n_; }
  int axis_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }

  int coord(VertexId v, int axis) const {
    return flat_[static_cast<std::size_t>(v) * sizes_.size() + static_cast<std::size_t>(axis)];
  }
  std::span<const int> coords_of(VertexId v) const {
    return {flat_.data() + static_cast<std::size_t>(v) * sizes_.size(), sizes_.size()};
  }

  /// Vertex holding the given coordinate vector.
  VertexId vertex_at(std::span<const int> vec) const;

  /// Cyclic +1 on one coordinate, wrapping l - 1 back to 0.
  VertexId increment(VertexId v, int axis) const;

  /// Element-wise increment of tail and head. The arc's vertices must agree
  /// on `axis`, which keeps both sides sorted under any vertex order that is
  /// lexicographic in the coordinates.
  Hyperarc increment_arc(const Hyperarc& arc, int axis) const;

  /// The one coordinate where a and b differ, or nullopt if they differ in
  /// more than one position. a == b is an error.
  std::optional<int> single_differing_axis(VertexId a, VertexId b) const;

  bool coords_less(VertexId a, VertexId b) const;

 private:
  int n_ = 0;
  std::vector<int> sizes_;
  std::vector<int> strides_;
  std::vector<int> flat_;         // n x k, row-major
  std::vector<int> grid_index_;   // per vertex
  std::vector<VertexId> vertex_at_;
};

/// Lexicographic orderings used throughout: vertices sorted by coordinate
/// vector, sides of each arc re-sorted by that vertex order, arcs sorted by
/// (tail, head) position sequences.
struct CanonicalForm {
  std::vector<VertexId> vertex_order;  // ids in lexicographic coordinate order
  std::vector<int> vertex_rank;        // inverse of vertex_order
  std::vector<Hyperarc> arcs;          // canonicalized and sorted
  std::vector<int> arc_source;         // arcs[i] came from h.arcs()[arc_source[i]]
};

CanonicalForm canonical_order(const DirectedHypergraph& h, const Coordinatization& c);

bool rank_arc_less(const Hyperarc& a, const Hyperarc& b, std::span<const int> vertex_rank);

/// Binary search over a canonically sorted arc sequence; the probe must have
/// its sides sorted under the same vertex ranks. O(r) per comparison.
bool arc_in_set(std::span<const Hyperarc> arcs, std::span<const int> vertex_rank,
                const Hyperarc& probe);

/// Induced sub-hypergraph on the vertices that agree with `through` on every
/// coordinate outside `axes`. Display names are preserved.
DirectedHypergraph extract_layer(const DirectedHypergraph& h, const Coordinatization& c,
                                 const std::vector<int>& axes, VertexId through);

}  // namespace hgpfd

#endif  // HGPFD_COORDINATES_HPP
