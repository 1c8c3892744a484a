#include "hgpfd/graph_pfd.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "hgpfd/union_find.hpp"

namespace hgpfd {

std::string ColoringDiagnostic::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::edge_not_separated:
      os << "edge " << u << "-" << v << " of color " << color + 1
         << " does not change any coordinate (endpoints stay connected without that color)";
      break;
    case Kind::coordinate_clash:
      os << "vertices " << u << " and " << v << " received the same coordinate vector";
      break;
    case Kind::grid_incomplete:
      os << "coordinates are injective but do not fill the factor grid";
      break;
  }
  return os.str();
}

std::variant<Coordinatization, ColoringDiagnostic> coordinates_from_coloring(
    const UndirectedGraph& g, const EdgeColoring& coloring) {
  const int n = g.vertex_count;
  if (!graph_connected(g)) throw std::invalid_argument("coloring needs a connected graph");
  const int k = coloring.color_count;
  if (static_cast<int>(coloring.colors.size()) != g.edge_count()) {
    throw std::invalid_argument("coloring does not cover the edge set");
  }
  if (k == 0) {
    // no edges and connected: single vertex
    return Coordinatization::trivial_k1();
  }

  const std::vector<int> ranks = bfs_ranks(g, 0);
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
  std::vector<int> sizes(static_cast<std::size_t>(k));

  for (int c = 0; c < k; ++c) {
    UnionFind comp(n);
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      if (coloring.colors[ei] != c) comp.merge(g.edges[ei].first, g.edges[ei].second);
    }
    // value of a component = its position when components are ordered by the
    // BFS rank of their earliest-visited member; the root's component gets 0
    std::vector<int> min_rank(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      int root = comp.find(v);
      int r = ranks[static_cast<std::size_t>(v)];
      if (min_rank[static_cast<std::size_t>(root)] < 0 || r < min_rank[static_cast<std::size_t>(root)]) {
        min_rank[static_cast<std::size_t>(root)] = r;
      }
    }
    std::vector<std::pair<int, int>> roots;  // (min rank, root)
    for (int v = 0; v < n; ++v) {
      if (comp.find(v) == v) roots.emplace_back(min_rank[static_cast<std::size_t>(v)], v);
    }
    std::sort(roots.begin(), roots.end());
    std::vector<int> value(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < roots.size(); ++i) value[static_cast<std::size_t>(roots[i].second)] = static_cast<int>(i);
    for (int v = 0; v < n; ++v) coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = value[static_cast<std::size_t>(comp.find(v))];
    sizes[static_cast<std::size_t>(c)] = static_cast<int>(roots.size());
  }

  // every edge must change exactly its own coordinate; the other coordinates
  // cannot move because the edge survives in every other color's subgraph
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto [u, v] = g.edges[ei];
    const int c = coloring.colors[ei];
    if (coords[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] ==
        coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]) {
      return ColoringDiagnostic{ColoringDiagnostic::Kind::edge_not_separated, u, v, c};
    }
  }

  {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return coords[static_cast<std::size_t>(a)] < coords[static_cast<std::size_t>(b)];
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (coords[static_cast<std::size_t>(order[i - 1])] == coords[static_cast<std::size_t>(order[i])]) {
        return ColoringDiagnostic{ColoringDiagnostic::Kind::coordinate_clash,
                                  std::min(order[i - 1], order[i]),
                                  std::max(order[i - 1], order[i]), -1};
      }
    }
  }

  long long grid = 1;
  for (int l : sizes) {
    grid *= l;
    if (grid > n) break;
  }
  if (grid != n) {
    return ColoringDiagnostic{ColoringDiagnostic::Kind::grid_incomplete, -1, -1, -1};
  }

  return Coordinatization(n, std::move(sizes), std::move(coords));
}

namespace {

// Colors compressed to 0..k-1, numbered by each class's smallest edge index.
int compress_colors(UnionFind& uf, std::vector<int>& colors) {
  std::vector<int> dense(colors.size(), -1);
  int next = 0;
  for (std::size_t e = 0; e < colors.size(); ++e) {
    int root = uf.find(static_cast<int>(e));
    if (dense[static_cast<std::size_t>(root)] < 0) dense[static_cast<std::size_t>(root)] = next++;
    colors[e] = dense[static_cast<std::size_t>(root)];
  }
  return next;
}

// Path between the endpoints of a failed edge, restricted to other colors;
// exists exactly when coordinates_from_coloring reported the failure.
std::vector<int> path_colors_avoiding(const UndirectedGraph& g, const std::vector<int>& colors,
                                      int banned_color, int from, int to) {
  std::vector<int> parent_edge(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
  std::deque<int> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      int ei = g.edge_index(u, v);
      if (colors[static_cast<std::size_t>(ei)] == banned_color) continue;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        parent_edge[static_cast<std::size_t>(v)] = ei;
        queue.push_back(v);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) {
    throw InternalError("reported unseparated edge has separated endpoints");
  }
  std::set<int> used;
  for (int v = to; v != from;) {
    int ei = parent_edge[static_cast<std::size_t>(v)];
    used.insert(colors[static_cast<std::size_t>(ei)]);
    const auto [a, b] = g.edges[static_cast<std::size_t>(ei)];
    v = (a == v) ? b : a;
  }
  return {used.begin(), used.end()};
}

}  // namespace

GraphPfd pfd_graph(const UndirectedGraph& g) {
  if (g.vertex_count < 1) throw std::invalid_argument("pfd_graph: empty graph");
  if (!graph_connected(g)) throw std::invalid_argument("pfd_graph: disconnected input");

  GraphPfd out;
  const int n = g.vertex_count;
  if (n == 1) {
    out.coords = Coordinatization::trivial_k1();
    return out;
  }

  const int m = g.edge_count();
  UnionFind classes(m);

  // Square-property pass over all pairs of edges sharing a vertex.
  for (int u = 0; u < n; ++u) {
    const auto& nb = g.adj[static_cast<std::size_t>(u)];
    for (std::size_t ai = 0; ai < nb.size(); ++ai) {
      const int v = nb[ai];
      const int euv = g.edge_index(u, v);
      for (std::size_t bi = ai + 1; bi < nb.size(); ++bi) {
        const int w = nb[bi];
        const int euw = g.edge_index(u, w);
        if (g.has_edge(v, w)) {
          classes.merge(euv, euw);  // triangles are monochromatic
          continue;
        }
        // chordless squares u-v-x-w: x adjacent to v and w but not to u
        int squares = 0;
        const auto& nv = g.adj[static_cast<std::size_t>(v)];
        const auto& nw = g.adj[static_cast<std::size_t>(w)];
        std::size_t i = 0, j = 0;
        while (i < nv.size() && j < nw.size()) {
          if (nv[i] < nw[j]) {
            ++i;
          } else if (nv[i] > nw[j]) {
            ++j;
          } else {
            const int x = nv[i];
            ++i;
            ++j;
            if (x == u || g.has_edge(u, x)) continue;
            ++squares;
            // opposite edges of a chordless square share a factor
            classes.merge(euv, g.edge_index(w, x));
            classes.merge(euw, g.edge_index(v, x));
          }
        }
        // edges of different factors span exactly one chordless square
        if (squares != 1) classes.merge(euv, euw);
      }
    }
  }

  std::vector<int> colors(static_cast<std::size_t>(m));
  int k = compress_colors(classes, colors);

  // Repair loop: the closure above can still be finer than a product
  // relation; merge classes until the coordinate assignment goes through.
  Coordinatization coords;
  for (;;) {
    auto res = coordinates_from_coloring(g, EdgeColoring{k, colors});
    if (std::holds_alternative<Coordinatization>(res)) {
      coords = std::get<Coordinatization>(std::move(res));
      break;
    }
    const auto& diag = std::get<ColoringDiagnostic>(res);
    if (diag.kind != ColoringDiagnostic::Kind::edge_not_separated) {
      throw InternalError("edge classes do not form a product relation: " + diag.describe());
    }
    UnionFind color_uf(k);
    for (int c : path_colors_avoiding(g, colors, diag.color, diag.u, diag.v)) {
      color_uf.merge(diag.color, c);
    }
    std::vector<int> dense(static_cast<std::size_t>(k), -1);
    int next = 0;
    for (auto& c : colors) {
      int root = color_uf.find(c);
      if (dense[static_cast<std::size_t>(root)] < 0) dense[static_cast<std::size_t>(root)] = next++;
      c = dense[static_cast<std::size_t>(root)];
    }
    if (next >= k) throw InternalError("repair did not reduce the color count");
    k = next;
  }

  // Factor per color: vertex set is the coordinate range, edge set the union
  // of the projections of that color's edges. A count mismatch would mean
  // non-isomorphic layers, which the relation rules exclude.
  std::vector<UndirectedGraph> factors(static_cast<std::size_t>(k));
  std::vector<long long> class_edges(static_cast<std::size_t>(k), 0);
  {
    std::vector<std::vector<std::pair<int, int>>> fedges(static_cast<std::size_t>(k));
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      const auto [u, v] = g.edges[ei];
      const int c = colors[ei];
      ++class_edges[static_cast<std::size_t>(c)];
      int cu = coords.coord(u, c);
      int cv = coords.coord(v, c);
      fedges[static_cast<std::size_t>(c)].emplace_back(std::min(cu, cv), std::max(cu, cv));
    }
    for (int c = 0; c < k; ++c) {
      auto& fe = fedges[static_cast<std::size_t>(c)];
      std::sort(fe.begin(), fe.end());
      fe.erase(std::unique(fe.begin(), fe.end()), fe.end());
      factors[static_cast<std::size_t>(c)] =
          UndirectedGraph::from_edges(coords.sizes()[static_cast<std::size_t>(c)], std::move(fe));
      const long long copies = n / coords.sizes()[static_cast<std::size_t>(c)];
      if (class_edges[static_cast<std::size_t>(c)] !=
          copies * factors[static_cast<std::size_t>(c)].edge_count()) {
        throw InternalError("factor layers of one edge class are not isomorphic");
      }
    }
  }

  // Canonical factor order; stable, so classes with equal factors keep the
  // order of their smallest edge.
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) keys[static_cast<std::size_t>(c)] = canonical_edge_string(factors[static_cast<std::size_t>(c)]);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& fa = factors[static_cast<std::size_t>(a)];
    const auto& fb = factors[static_cast<std::size_t>(b)];
    if (fa.vertex_count != fb.vertex_count) return fa.vertex_count < fb.vertex_count;
    if (fa.edge_count() != fb.edge_count()) return fa.edge_count() < fb.edge_count();
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  std::vector<int> position(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  out.factors.reserve(static_cast<std::size_t>(k));
  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out.factors.push_back(std::move(factors[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]));
    sizes.push_back(out.factors.back().vertex_count);
  }
  std::vector<std::vector<int>> permuted(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      permuted[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] =
          coords.coord(v, order[static_cast<std::size_t>(i)]);
    }
  }
  out.coords = Coordinatization(n, std::move(sizes), std::move(permuted));
  out.coloring.color_count = k;
  out.coloring.colors.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    out.coloring.colors[static_cast<std::size_t>(e)] = position[static_cast<std::size_t>(colors[static_cast<std::size_t>(e)])];
  }
  return out;
}

}  // namespace hgpfd
