#ifndef HGPFD_GRAPH_HPP
#define HGPFD_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "hgpfd/hypergraph.hpp"

namespace hgpfd {

/// Simple undirected graph: symmetric sorted adjacency lists plus a
/// canonical edge list (u < v, lexicographically sorted).
struct UndirectedGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::pair<int, int>> edges;

  /// Normalizes, deduplicates and rejects self-loops / out-of-range ids.
  static UndirectedGraph from_edges(int n, std::vector<std::pair<int, int>> e);

  bool has_edge(int u, int v) const;
  /// Index into edges of {u, v}, or -1.
  int edge_index(int u, int v) const;
  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
};

bool graph_connected(const UndirectedGraph& g);

/// BFS visit ranks from root over sorted adjacency; -1 for unreachable.
std::vector<int> bfs_ranks(const UndirectedGraph& g, int root);

/// Cartesian graph product with the same vertex layout as the hypergraph
/// product: (x, y) gets id y * n1 + x.
UndirectedGraph graph_cartesian_product(const UndirectedGraph& a, const UndirectedGraph& b);

/// The 2-section: x and y are adjacent iff they share some arc. Every arc
/// induces a clique.
UndirectedGraph two_section(const DirectedHypergraph& h);

/// A graph as an undirected hypergraph (every edge a 2-vertex hyperedge
/// with tail == head). Vertices are named "1".."n".
DirectedHypergraph to_hypergraph(const UndirectedGraph& g);

/// Deterministic one-line encoding of the edge list, used as a sort key.
std::string canonical_edge_string(const UndirectedGraph& g);

// Small builders used all over the tests and the benchmark harness.
UndirectedGraph complete_graph(int n);
UndirectedGraph cycle_graph(int n);
UndirectedGraph path_graph(int n);
UndirectedGraph hypercube_graph(int dims);

}  // namespace hgpfd

#endif  // HGPFD_GRAPH_HPP
