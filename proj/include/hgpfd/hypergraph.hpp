#ifndef HGPFD_HYPERGRAPH_HPP
#define HGPFD_HYPERGRAPH_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hgpfd {

using VertexId = std::int32_t;

/// Raised when a pipeline-internal consistency check fails. The CLI maps
/// this to exit code 3; std::invalid_argument (bad input) maps to 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One directed hyperedge: an ordered pair (tail, head) of non-empty vertex
/// sets. Both sides are kept as sorted sequences of distinct ids; an
/// undirected hyperedge is stored with tail == head.
struct Hyperarc {
  std::vector<VertexId> tail;
  std::vector<VertexId> head;

  /// Distinct vertices of the arc (tail and head merged), ascending.
  std::vector<VertexId> vertices() const;
  /// |V(e)|, the number of distinct vertices covered by the arc.
  int vertex_count() const;
  bool undirected() const { return tail == head; }

  friend bool operator==(const Hyperarc&, const Hyperarc&) = default;
  friend auto operator<=>(const Hyperarc&, const Hyperarc&) = default;
};

/// Sorts both sides and drops duplicate ids.
Hyperarc canonical_arc(Hyperarc arc);

enum class IssueKind {
  no_vertices,
  duplicate_name,
  empty_side,
  loop,
  multi_arc,
  dangling_vertex,
  duplicate_vertex_in_side,
};

struct ValidationIssue {
  IssueKind kind;
  int arc_index;  // -1 when the issue is not tied to one arc
  std::string message;
};

/// Finite directed hypergraph over a dense vertex table. Vertices carry
/// string display names (unique); arcs form a set (no multi-arcs).
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;

  /// Builds from raw parts without canonicalizing or checking anything;
  /// validate() reports whatever is wrong with the result.
  static DirectedHypergraph unchecked(std::vector<std::string> names,
                                      std::vector<Hyperarc> arcs);

  VertexId add_vertex(std::string name);
  /// Id of a named vertex, or -1.
  VertexId find_vertex(std::string_view name) const;

  /// Canonicalizes the arc and inserts it. Returns false if an equal arc is
  /// already present. Throws std::invalid_argument on empty sides or loops
  /// and std::out_of_range on unknown vertex ids.
  bool add_arc(std::vector<VertexId> tail, std::vector<VertexId> head);

  /// Membership test; the probe must be canonical.
  bool has_arc(const Hyperarc& arc) const;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  /// max |V(e)| over all arcs; 0 for an arcless hypergraph.
  int rank() const { return rank_; }

  const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Hyperarc>& arcs() const { return arcs_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<Hyperarc> arcs_;
  std::set<Hyperarc> arc_set_;
  int rank_ = 0;
};

/// Checks every structural invariant and returns the list of violations
/// (empty means valid): loops, multi-arcs, empty sides, dangling ids,
/// duplicate vertices inside a side, duplicate display names.
std::vector<ValidationIssue> validate(const DirectedHypergraph& h);

/// Throws std::invalid_argument listing the violations, if any.
void ensure_valid(const DirectedHypergraph& h);

/// Weak connectivity: any two vertices joined by a path alternating
/// vertices and arcs. K1 counts as connected.
bool is_connected(const DirectedHypergraph& h);

/// Cartesian product. Vertex (x, y) gets id y * |V(a)| + x and display name
/// "<name(x)>|<name(y)>". Arcs copy one factor's arc while the other
/// coordinate is fixed; duplicates are dropped (arc sets).
DirectedHypergraph cartesian_product(const DirectedHypergraph& a,
                                     const DirectedHypergraph& b);

}  // namespace hgpfd

#endif  // HGPFD_HYPERGRAPH_HPP
