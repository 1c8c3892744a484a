#ifndef HGPFD_HYPER_PFD_HPP
#define HGPFD_HYPER_PFD_HPP

#include <vector>

#include "hgpfd/coordinates.hpp"
#include "hgpfd/graph_pfd.hpp"
#include "hgpfd/hypergraph.hpp"

namespace hgpfd {

/// Output of the preprocessing stage: the input's 2-section with its prime
/// factorization, the induced pre-coordinatization of the hypergraph, and
/// the lexicographic vertex/arc orders everything downstream relies on.
struct Preprocessed {
  UndirectedGraph section;
  GraphPfd section_pfd;
  CanonicalForm canon;
  int axis_count = 0;

  const Coordinatization& coords() const { return section_pfd.coords; }
};

/// Validates and canonicalizes a connected hypergraph: 2-section PFD,
/// pre-coordinates, lexicographic vertex and arc lists.
Preprocessed preprocessing(const DirectedHypergraph& h);

/// Graph on the 2-section factor axes {0..k-1}. An edge {i,j} records an arc
/// in direction j whose incremental copy along axis i is missing, so axes i
/// and j cannot belong to different hypergraph factors. Connected components
/// give the partition into prime-factor axis groups.
struct MergeGraph {
  int axis_count = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique

  /// One record per missing increment encountered during the sweep, in
  /// lexicographic arc order (an edge can be triggered several times).
  struct Trigger {
    int arc_index;       // position in Preprocessed::canon.arcs
    int differing_axis;  // axis the arc's own vertices vary in
    int missing_axis;    // axis whose incremental copy was absent
  };
  std::vector<Trigger> triggers;

  /// Components as sorted axis lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const;
};

/// Single sweep over the lexicographic arc list: for each arc (direction j)
/// and every other axis i, look up the arc's increment along i by binary
/// search; a miss adds edge {i,j}.
MergeGraph build_merge_graph(const Preprocessed& pre);

/// A prime factor decomposition: the factors (vertices named "1".."l"), the
/// coordinatization of the input that realizes the product, and the
/// partition of 2-section axes backing each factor.
struct Factorization {
  std::vector<DirectedHypergraph> factors;
  Coordinatization coords;
  std::vector<std::vector<int>> partition;
};

/// Groups the 2-section axes by merge-graph component, colors arcs and the
/// 2-section accordingly, recomputes coordinates for the merged coloring and
/// materializes one factor per component (the layer through the all-ones
/// vertex, renamed by coordinate value).
Factorization combine(const DirectedHypergraph& h, const Preprocessed& pre,
                      const MergeGraph& merges);

/// Checks arc-by-arc that the factors reproduce the input through the
/// coordinatization (vertex bijection, every projected arc present in its
/// factor, arc counts matching the product formula). Throws InternalError.
void verify_factorization(const DirectedHypergraph& h, const Factorization& f);

/// The whole pipeline: preprocessing, merge-graph sweep, combine, soundness
/// check. Requires a valid connected hypergraph; K1 yields zero factors.
Factorization pfd_hypergraph(const DirectedHypergraph& h);

}  // namespace hgpfd

#endif  // HGPFD_HYPER_PFD_HPP
