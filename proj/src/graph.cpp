#include "hgpfd/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hgpfd {

UndirectedGraph UndirectedGraph::from_edges(int n, std::vector<std::pair<int, int>> e) {
  UndirectedGraph g;
  g.vertex_count = n;
  g.adj.resize(static_cast<std::size_t>(n));
  for (auto& [u, v] : e) {
    if (u == v) throw std::invalid_argument("self-loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  g.edges = std::move(e);
  for (const auto& [u, v] : g.edges) {
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

bool UndirectedGraph::has_edge(int u, int v) const {
  const auto& nb = adj[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int UndirectedGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair<int, int>{u, v});
  if (it == edges.end() || *it != std::pair<int, int>{u, v}) return -1;
  return static_cast<int>(it - edges.begin());
}

std::vector<int> bfs_ranks(const UndirectedGraph& g, int root) {
  std::vector<int> rank(static_cast<std::size_t>(g.vertex_count), -1);
  std::deque<int> queue{root};
  int next = 0;
  rank[static_cast<std::size_t>(root)] = next++;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (rank[static_cast<std::size_t>(v)] < 0) {
        rank[static_cast<std::size_t>(v)] = next++;
        queue.push_back(v);
      }
    }
  }
  return rank;
}

bool graph_connected(const UndirectedGraph& g) {
  if (g.vertex_count == 0) return false;
  auto rank = bfs_ranks(g, 0);
  return std::none_of(rank.begin(), rank.end(), [](int r) { return r < 0; });
}

UndirectedGraph graph_cartesian_product(const UndirectedGraph& a, const UndirectedGraph& b) {
  const int na = a.vertex_count;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(a.edge_count()) * b.vertex_count +
                static_cast<std::size_t>(b.edge_count()) * a.vertex_count);
  auto pid = [na](int x, int y) { return y * na + x; };
  for (const auto& [x, x2] : a.edges) {
    for (int y = 0; y < b.vertex_count; ++y) edges.emplace_back(pid(x, y), pid(x2, y));
  }
  for (const auto& [y, y2] : b.edges) {
    for (int x = 0; x < na; ++x) edges.emplace_back(pid(x, y), pid(x, y2));
  }
  return UndirectedGraph::from_edges(na * b.vertex_count, std::move(edges));
}

UndirectedGraph two_section(const DirectedHypergraph& h) {
  std::vector<std::pair<int, int>> edges;
  for (const Hyperarc& arc : h.arcs()) {
    auto vs = arc.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        edges.emplace_back(vs[i], vs[j]);
      }
    }
  }
  return UndirectedGraph::from_edges(h.vertex_count(), std::move(edges));
}

DirectedHypergraph to_hypergraph(const UndirectedGraph& g) {
  DirectedHypergraph h;
  for (int v = 0; v < g.vertex_count; ++v) h.add_vertex(std::to_string(v + 1));
  for (const auto& [u, v] : g.edges) h.add_arc({u, v}, {u, v});
  return h;
}

std::string canonical_edge_string(const UndirectedGraph& g) {
  std::ostringstream os;
  os << g.vertex_count << ':';
  for (const auto& [u, v] : g.edges) os << u << '-' << v << ';';
  return os.str();
}

UndirectedGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return UndirectedGraph::from_edges(n, std::move(edges));
}

UndirectedGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return UndirectedGraph::from_edges(n, std::move(edges));
}

UndirectedGraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return UndirectedGraph::from_edges(n, std::move(edges));
}

UndirectedGraph hypercube_graph(int dims) {
  const int n = 1 << dims;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int d = 0; d < dims; ++d) {
      int v = u ^ (1 << d);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return UndirectedGraph::from_edges(n, std::move(edges));
}

}  // namespace hgpfd
